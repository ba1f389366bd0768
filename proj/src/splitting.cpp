#include "raagsplit/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "raagsplit/error.hpp"

namespace raagsplit {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::hnn_complete:
      return "hnn-complete";
    case WitnessKind::direct_amalgam:
      return "direct-amalgam";
    case WitnessKind::star_split:
      return "star-split";
  }
  return "unknown";
}

std::string_view to_string(WitnessCase origin) {
  switch (origin) {
    case WitnessCase::complete_graph:
      return "complete-graph";
    case WitnessCase::proper_subpiece:
      return "proper-subpiece";
    case WitnessCase::clique_is_piece:
      return "clique-is-piece";
    case WitnessCase::separator_is_clique:
      return "separator-is-clique";
  }
  return "unknown";
}

namespace {

// Depth-first in ascending order, so the first hit is lexicographically least.
bool first_clique(const Graph& g, const std::vector<Vertex>& pool, std::size_t from,
                  std::size_t wanted, std::vector<Vertex>& chosen) {
  if (chosen.size() == wanted) return true;
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (pool.size() - i < wanted - chosen.size()) return false;
    Vertex v = pool[i];
    bool fits = std::all_of(chosen.begin(), chosen.end(),
                            [&](Vertex w) { return g.adjacent(v, w); });
    if (!fits) continue;
    chosen.push_back(v);
    if (first_clique(g, pool, i + 1, wanted, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

std::pair<VertexSet, VertexSet> sides_along(const Graph& g, const VertexSet& sep) {
  auto comps = components_without(g, sep);
  VertexSet rest;
  for (std::size_t i = 1; i < comps.size(); ++i) rest = rest.united(comps[i]);
  return {sep.united(comps.front()), sep.united(rest)};
}

}  // namespace

std::optional<VertexSet> extend_clique_to_rank(const Graph& g, const VertexSet& s, int n) {
  if (!is_clique(g, s)) {
    throw InvalidArgument(g.describe(s) + " is not a clique");
  }
  if (n < 0 || static_cast<std::size_t>(n) < s.size()) {
    throw InvalidRank("rank " + std::to_string(n) + " is below the clique size " +
                      std::to_string(s.size()));
  }
  const std::size_t wanted = static_cast<std::size_t>(n) - s.size();
  std::vector<Vertex> chosen;
  if (!first_clique(g, link(g, s).members(), 0, wanted, chosen)) return std::nullopt;
  return s.united(VertexSet(std::move(chosen)));
}

std::optional<SplittingWitness> splits_over_rank(const Graph& g, int n) {
  if (n < 0) throw InvalidRank("rank must be non-negative, got " + std::to_string(n));
  const auto rank = static_cast<std::size_t>(n);

  if (is_complete(g) && g.vertex_count() == rank + 1) {
    SplittingWitness w;
    w.kind = WitnessKind::hnn_complete;
    w.origin = WitnessCase::complete_graph;
    w.rank = n;
    w.clique = g.all_vertices();
    return w;
  }

  // Any separating subset of a clique contains an inclusion-minimal
  // separating clique, so it suffices to try to grow each of those.
  for (const auto& sep : minimal_clique_separators(g)) {
    if (sep.size() > rank) continue;
    auto clique = extend_clique_to_rank(g, sep, n);
    if (!clique) continue;

    SplittingWitness w;
    w.rank = n;
    w.clique = *clique;
    w.separator = sep;

    // The clique minus the separator lies in a single component C of Γ - S.
    const VertexSet outside = clique->without(sep);
    VertexSet piece = sep;
    for (const auto& comp : components_without(g, sep)) {
      if (outside.empty() || comp.contains(outside.front())) {
        piece = sep.united(comp);
        break;
      }
    }

    if (*clique == sep) {
      w.kind = WitnessKind::direct_amalgam;
      w.origin = WitnessCase::separator_is_clique;
      w.sides = sides_along(g, *clique);
    } else if (clique->is_proper_subset_of(piece)) {
      w.kind = WitnessKind::direct_amalgam;
      w.origin = WitnessCase::proper_subpiece;
      w.sides = sides_along(g, *clique);
    } else {
      // K = S ∪ C, so every u ∈ C has star(u) = K, and other components of
      // Γ - S keep star(u) away from V(Γ).
      w.kind = WitnessKind::star_split;
      w.origin = WitnessCase::clique_is_piece;
      w.star_vertex = outside.front();
    }
    return w;
  }
  return std::nullopt;
}

std::vector<int> splitting_spectrum(const Graph& g) {
  const std::size_t vertices = g.vertex_count();
  const std::size_t bound =
      std::max(clique_number(g), vertices == 0 ? std::size_t{0} : vertices - 1);
  std::vector<int> out;
  for (std::size_t n = 0; n <= bound; ++n) {
    if (splits_over_rank(g, static_cast<int>(n))) out.push_back(static_cast<int>(n));
  }
  return out;
}

namespace {

// Deliberately self-contained: shares no search code with splits_over_rank.
class BruteForce {
 public:
  explicit BruteForce(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  bool complete() const {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!g_.adjacent(u, v)) return false;
      }
    }
    return true;
  }

  bool disconnected_without(const std::vector<char>& removed) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto root = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!removed[u] && !removed[v] && g_.adjacent(u, v)) parent[root(u)] = root(v);
      }
    }
    std::size_t roots = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (!removed[v] && root(v) == v) ++roots;
    }
    return roots >= 2;
  }

  bool some_subset_separates(const std::vector<Vertex>& clique) const {
    std::vector<char> removed(n_, 0);
    return subsets(clique, 0, removed);
  }

  bool search(std::size_t size, Vertex from, std::vector<Vertex>& chosen) const {
    if (chosen.size() == size) {
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
          if (!g_.adjacent(chosen[i], chosen[j])) return false;
        }
      }
      return some_subset_separates(chosen);
    }
    for (Vertex v = from; v < n_; ++v) {
      chosen.push_back(v);
      bool hit = search(size, v + 1, chosen);
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  }

 private:
  bool subsets(const std::vector<Vertex>& pool, std::size_t i,
               std::vector<char>& removed) const {
    if (i == pool.size()) return disconnected_without(removed);
    if (subsets(pool, i + 1, removed)) return true;
    removed[pool[i]] = 1;
    bool hit = subsets(pool, i + 1, removed);
    removed[pool[i]] = 0;
    return hit;
  }

  const Graph& g_;
  std::size_t n_;
};

}  // namespace

bool brute_force_splits(const Graph& g, int n) {
  if (n < 0) return false;
  BruteForce oracle(g);
  const auto size = static_cast<std::size_t>(n);
  if (g.vertex_count() == size + 1 && oracle.complete()) return true;
  if (size > g.vertex_count()) return false;
  std::vector<Vertex> chosen;
  return oracle.search(size, 0, chosen);
}

bool witness_is_sound(const Graph& g, int n, const SplittingWitness& w) {
  if (n < 0 || w.rank != n) return false;
  const auto size = static_cast<std::size_t>(n);
  if (!w.clique.empty() && w.clique.back() >= g.vertex_count()) return false;
  switch (w.kind) {
    case WitnessKind::hnn_complete:
      return is_complete(g) && g.vertex_count() == size + 1 &&
             w.clique == g.all_vertices();
    case WitnessKind::direct_amalgam: {
      if (!w.separator || !w.sides) return false;
      const auto& [first, second] = *w.sides;
      return is_clique(g, w.clique) && w.clique.size() == size &&
             w.separator->is_subset_of(w.clique) && separates(g, *w.separator) &&
             separates(g, w.clique) && first.intersected(second) == w.clique &&
             first.united(second) == g.all_vertices() && first != w.clique &&
             second != w.clique;
    }
    case WitnessKind::star_split: {
      if (!w.separator || !w.star_vertex || *w.star_vertex >= g.vertex_count()) {
        return false;
      }
      const VertexSet st = star(g, VertexSet{*w.star_vertex});
      return st == w.clique && w.clique.size() == size && st != g.all_vertices() &&
             w.separator->is_subset_of(w.clique) && separates(g, *w.separator);
    }
  }
  return false;
}

}  // namespace raagsplit
