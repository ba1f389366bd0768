#ifndef RAAGSPLIT_CCD_HPP_
#define RAAGSPLIT_CCD_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "raagsplit/graph.hpp"
#include "raagsplit/presentation.hpp"

namespace raagsplit {

// Complete-cut-decomposition: a tree whose nodes carry induced pieces of the
// ambient graph and whose edges carry the intersections of adjacent pieces.
struct CcdTree {
  std::vector<VertexSet> pieces;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<VertexSet> cuts;  // cuts[i] = pieces[edges[i].first] ∩ pieces[edges[i].second]

  friend bool operator==(const CcdTree&, const CcdTree&) = default;
};

struct CcdReport {
  bool well_formed = false;     // a tree, with cuts matching the intersections
  bool covers_edges = false;    // every edge of g lies inside some piece
  bool pieces_cut_free = false; // no piece has a complete cut of its own
  bool cuts_valid = false;      // each cut is a separating clique, proper in both pieces
  std::vector<std::string> problems;

  bool passed() const {
    return well_formed && covers_edges && pieces_cut_free && cuts_valid;
  }
};

// Recursive decomposition along lexicographically least minimum-size complete
// cuts. Throws UnsupportedInput for empty or disconnected graphs.
CcdTree complete_cut_decomposition(const Graph& g);

CcdReport validate_ccd(const Graph& g, const CcdTree& t);

struct GroupEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  Presentation group;  // free abelian on the cut
  // Edge-group generator i goes to generator into_source[i] of the source
  // vertex group, and likewise for the target.
  std::vector<std::size_t> into_source;
  std::vector<std::size_t> into_target;
};

struct GraphOfGroups {
  std::vector<Presentation> vertex_groups;
  std::vector<GroupEdge> edges;
};

// Throws InvalidArgument unless validate_ccd(g, t) passes.
GraphOfGroups graph_of_groups(const Graph& g, const CcdTree& t);

}  // namespace raagsplit

#endif  // RAAGSPLIT_CCD_HPP_
