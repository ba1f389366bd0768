#include "raagsplit/ccd.hpp"

#include <algorithm>
#include <numeric>

#include "raagsplit/error.hpp"

namespace raagsplit {

namespace {

CcdTree decompose(const Graph& g, const VertexSet& part) {
  const Graph local = induced_subgraph(g, part);
  const auto seps = minimal_clique_separators(local);
  if (seps.empty()) return CcdTree{{part}, {}, {}};

  // Smallest size first, then lexicographic. A minimum-size complete cut is
  // automatically inclusion-minimal, so it is among seps.
  const VertexSet cut_local = *std::min_element(
      seps.begin(), seps.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
  auto comps = components_without(local, cut_local);
  VertexSet rest;
  for (std::size_t i = 1; i < comps.size(); ++i) rest = rest.united(comps[i]);

  const VertexSet cut = lift(cut_local, part);
  CcdTree first = decompose(g, lift(cut_local.united(comps.front()), part));
  CcdTree second = decompose(g, lift(cut_local.united(rest), part));

  // Some piece of each half strictly contains the cut; if not, the
  // decomposition of that half is wrong.
  auto attachment = [&](const CcdTree& t) {
    for (std::size_t i = 0; i < t.pieces.size(); ++i) {
      if (cut.is_proper_subset_of(t.pieces[i])) return i;
    }
    throw InternalInvariant("no piece strictly contains the cut " + g.describe(cut));
  };
  const std::size_t left = attachment(first);
  const std::size_t right = attachment(second);

  const std::size_t offset = first.pieces.size();
  CcdTree out = std::move(first);
  out.pieces.insert(out.pieces.end(), second.pieces.begin(), second.pieces.end());
  for (auto [r, s] : second.edges) out.edges.emplace_back(r + offset, s + offset);
  out.cuts.insert(out.cuts.end(), second.cuts.begin(), second.cuts.end());
  out.edges.emplace_back(left, right + offset);
  out.cuts.push_back(out.pieces[left].intersected(out.pieces[right + offset]));
  return out;
}

bool is_tree(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (nodes == 0 || edges.size() + 1 != nodes) return false;
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [r, s] : edges) {
    if (r >= nodes || s >= nodes) return false;
    const std::size_t a = root(r);
    const std::size_t b = root(s);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

CcdTree complete_cut_decomposition(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw UnsupportedInput("the empty graph has no complete-cut-decomposition");
  }
  if (!is_connected(g)) {
    throw UnsupportedInput(
        "complete-cut-decompositions are only built for connected graphs; "
        "decompose each component separately");
  }
  return decompose(g, g.all_vertices());
}

CcdReport validate_ccd(const Graph& g, const CcdTree& t) {
  CcdReport report;
  const std::size_t n = g.vertex_count();

  bool pieces_ok = !t.pieces.empty();
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    const auto& piece = t.pieces[i];
    if (piece.empty() || piece.back() >= n) {
      pieces_ok = false;
      report.problems.push_back("piece " + std::to_string(i) + " is empty or out of range");
    }
  }
  report.well_formed = pieces_ok && is_tree(t.pieces.size(), t.edges) &&
                       t.cuts.size() == t.edges.size();
  if (report.well_formed) {
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      auto [r, s] = t.edges[i];
      if (t.cuts[i] != t.pieces[r].intersected(t.pieces[s])) {
        report.well_formed = false;
        report.problems.push_back("cut " + std::to_string(i) +
                                  " differs from the intersection of its pieces");
      }
    }
  } else {
    report.problems.push_back("tree structure is malformed");
  }
  if (!pieces_ok) return report;

  report.covers_edges = true;
  for (auto [u, v] : g.edges()) {
    bool inside = std::any_of(t.pieces.begin(), t.pieces.end(), [&](const VertexSet& p) {
      return p.contains(u) && p.contains(v);
    });
    if (!inside) {
      report.covers_edges = false;
      report.problems.push_back("edge " + g.label(u) + " -- " + g.label(v) +
                                " is not inside any piece");
    }
  }

  report.pieces_cut_free = true;
  for (const auto& piece : t.pieces) {
    const Graph local = induced_subgraph(g, piece);
    auto seps = minimal_clique_separators(local);
    if (!seps.empty()) {
      report.pieces_cut_free = false;
      report.problems.push_back("piece " + g.describe(piece) + " has complete cut " +
                                g.describe(lift(seps.front(), piece)));
    }
  }

  report.cuts_valid = true;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    auto [r, s] = t.edges[i];
    if (r >= t.pieces.size() || s >= t.pieces.size()) {
      report.cuts_valid = false;
      continue;
    }
    const VertexSet cut = t.pieces[r].intersected(t.pieces[s]);
    const bool ok = is_clique(g, cut) && separates(g, cut) &&
                    cut.is_proper_subset_of(t.pieces[r]) &&
                    cut.is_proper_subset_of(t.pieces[s]);
    if (!ok) {
      report.cuts_valid = false;
      report.problems.push_back("cut " + g.describe(cut) +
                                " is not a separating clique properly inside both pieces");
    }
  }
  return report;
}

GraphOfGroups graph_of_groups(const Graph& g, const CcdTree& t) {
  const CcdReport report = validate_ccd(g, t);
  if (!report.passed()) {
    throw InvalidArgument("not a valid complete-cut-decomposition: " +
                          (report.problems.empty() ? std::string("unknown")
                                                   : report.problems.front()));
  }
  auto position = [](const VertexSet& piece, Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(piece.begin(), piece.end(), v) - piece.begin());
  };

  GraphOfGroups out;
  for (const auto& piece : t.pieces) {
    out.vertex_groups.push_back(raag_presentation(induced_subgraph(g, piece)));
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    auto [r, s] = t.edges[i];
    GroupEdge e;
    e.source = r;
    e.target = s;
    e.group = raag_presentation(induced_subgraph(g, t.cuts[i]));
    for (Vertex v : t.cuts[i]) {
      e.into_source.push_back(position(t.pieces[r], v));
      e.into_target.push_back(position(t.pieces[s], v));
    }
    out.edges.push_back(std::move(e));
  }
  return out;
}

}  // namespace raagsplit
