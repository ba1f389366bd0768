#include "raagsplit/graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <set>

#include "raagsplit/error.hpp"

namespace raagsplit {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : items_(std::move(members)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(),
                       items_.end());
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::without(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out.items_));
  return out;
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  for (Vertex v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second) {
      throw InvalidArgument("duplicate vertex '" + labels_[v] + "'");
    }
  }
  adjacency_.assign(n * n, 0);
  neighbors_.resize(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidVertex("edge endpoint out of range");
    }
    if (u == v) {
      throw InvalidArgument("self-loop at '" + labels_[u] + "'");
    }
    if (adjacency_[u * n + v]) {
      throw InvalidArgument("duplicate edge '" + labels_[u] + "' -- '" +
                            labels_[v] + "'");
    }
    adjacency_[u * n + v] = adjacency_[v * n + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_labels(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InvalidVertex("unknown vertex '" + a + "'");
    if (ib == index.end()) throw InvalidVertex("unknown vertex '" + b + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return Graph(std::move(labels), indexed);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::all_vertices() const {
  std::vector<Vertex> all(vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return VertexSet(std::move(all));
}

void Graph::check(const VertexSet& s) const {
  if (!s.empty() && s.back() >= vertex_count()) {
    throw InvalidVertex("vertex index " + std::to_string(s.back()) +
                        " out of range for graph on " +
                        std::to_string(vertex_count()) + " vertices");
  }
}

std::string Graph::describe(const VertexSet& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += label(s[i]);
  }
  return out + "}";
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check(s);
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (Vertex v : s) labels.push_back(g.label(v));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) edges.emplace_back(i, j);
    }
  }
  return Graph(std::move(labels), edges);
}

VertexSet lift(const VertexSet& local, const VertexSet& ambient) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(ambient[v]);
  return VertexSet(std::move(out));
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  g.check(removed);
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  // Scanning roots in index order yields components sorted by smallest member.
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_without(g, VertexSet{});
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

VertexSet link(const Graph& g, const VertexSet& s) {
  g.check(s);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool all = std::all_of(s.begin(), s.end(),
                           [&](Vertex w) { return g.adjacent(v, w); });
    if (all) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet star(const Graph& g, const VertexSet& s) {
  return s.united(link(g, s));
}

bool is_clique(const Graph& g, const VertexSet& s) {
  g.check(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool separates(const Graph& g, const VertexSet& s) {
  return components_without(g, s).size() >= 2;
}

namespace {

// Bron-Kerbosch with Tomita pivoting: the pivot maximises |P ∩ N(u)|.
void bron_kerbosch(const Graph& g, std::vector<Vertex>& clique,
                   std::vector<Vertex> candidates, std::vector<Vertex> excluded,
                   std::vector<VertexSet>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) out.emplace_back(clique);
    return;
  }
  Vertex pivot = candidates.front();
  std::size_t best = 0;
  bool have_pivot = false;
  for (const auto* pool : {&candidates, &excluded}) {
    for (Vertex u : *pool) {
      std::size_t hits = std::count_if(candidates.begin(), candidates.end(),
                                       [&](Vertex w) { return g.adjacent(u, w); });
      if (!have_pivot || hits > best) {
        have_pivot = true;
        best = hits;
        pivot = u;
      }
    }
  }
  std::vector<Vertex> branch;
  for (Vertex v : candidates) {
    if (!g.adjacent(pivot, v)) branch.push_back(v);
  }
  for (Vertex v : branch) {
    std::vector<Vertex> next_candidates;
    std::vector<Vertex> next_excluded;
    for (Vertex w : candidates) {
      if (g.adjacent(v, w)) next_candidates.push_back(w);
    }
    for (Vertex w : excluded) {
      if (g.adjacent(v, w)) next_excluded.push_back(w);
    }
    clique.push_back(v);
    bron_kerbosch(g, clique, std::move(next_candidates), std::move(next_excluded), out);
    clique.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.insert(std::upper_bound(excluded.begin(), excluded.end(), v), v);
  }
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& c) {
  std::vector<Vertex> out;
  for (Vertex v : c) {
    for (Vertex w : g.neighbors(v)) {
      if (!c.contains(w)) out.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.vertex_count() == 0) return out;
  std::vector<Vertex> clique;
  bron_kerbosch(g, clique, g.all_vertices().members(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
  return best;
}

std::vector<VertexSet> minimal_separators(const Graph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return {};
  std::set<VertexSet> found;
  std::deque<VertexSet> pending;
  auto harvest = [&](const VertexSet& removed) {
    for (const auto& comp : components_without(g, removed)) {
      VertexSet sep = open_neighborhood(g, comp);
      if (!sep.empty() && found.insert(sep).second) pending.push_back(sep);
    }
  };
  // Seed with the neighbourhoods of components of g - N[v], then close under
  // S -> N(C) for components C of g - (S ∪ N(x)), x ∈ S.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    harvest(VertexSet(g.neighbors(v)).united(VertexSet{v}));
  }
  while (!pending.empty()) {
    VertexSet sep = std::move(pending.front());
    pending.pop_front();
    for (Vertex x : sep) {
      harvest(sep.united(VertexSet(g.neighbors(x))));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<VertexSet> minimal_clique_separators(const Graph& g) {
  if (g.vertex_count() < 2) return {};
  if (!is_connected(g)) return {VertexSet{}};
  std::vector<VertexSet> cliques;
  for (auto& sep : minimal_separators(g)) {
    if (is_clique(g, sep)) cliques.push_back(std::move(sep));
  }
  // A minimal (a,b)-separator can still contain a smaller separating set that
  // splits off a non-full component; keep only the inclusion-minimal ones.
  std::vector<VertexSet> out;
  for (const auto& s : cliques) {
    bool dominated = std::any_of(cliques.begin(), cliques.end(), [&](const VertexSet& t) {
      return t.is_proper_subset_of(s);
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

namespace {

std::vector<std::string> numbered_labels(std::size_t m) {
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = "v" + std::to_string(i);
  return labels;
}

}  // namespace

Graph complete_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  }
  return Graph(numbered_labels(m), edges);
}

Graph path_graph(std::size_t m) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < m; ++v) edges.emplace_back(v - 1, v);
  return Graph(numbered_labels(m), edges);
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < m; ++v) edges.emplace_back(v, (v + 1) % m);
  return Graph(numbered_labels(m), edges);
}

Graph empty_graph(std::size_t m) { return Graph(numbered_labels(m), {}); }

Graph random_connected_graph(std::size_t m, double density, std::mt19937_64& rng) {
  std::vector<char> present(m * m, 0);
  for (Vertex v = 1; v < m; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    const Vertex u = parent(rng);
    present[u * m + v] = 1;
  }
  std::bernoulli_distribution extra(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) {
      if (present[u * m + v] || extra(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(numbered_labels(m), edges);
}

}  // namespace raagsplit
