#ifndef RAAGSPLIT_TESTS_HELPERS_HPP_
#define RAAGSPLIT_TESTS_HELPERS_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "raagsplit/graph.hpp"

namespace fixtures {

using raagsplit::Graph;
using raagsplit::VertexSet;

inline Graph make(std::vector<std::string> labels,
                  std::vector<std::pair<std::string, std::string>> edges) {
  return Graph::from_labels(std::move(labels), edges);
}

inline VertexSet set(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<raagsplit::Vertex> out;
  for (const char* n : names) out.push_back(*g.find(n));
  return VertexSet(out);
}

// a - b - c
inline Graph p2() { return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

inline Graph k3() { return make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}); }

// triangle abc with the pendant edge a - d
inline Graph triangle_pendant() {
  return make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}});
}

inline Graph two_isolated() { return make({"a", "b"}, {}); }

// K2 plus an isolated vertex
inline Graph k2_plus_k1() { return make({"a", "b", "c"}, {{"a", "b"}}); }

}  // namespace fixtures

#endif  // RAAGSPLIT_TESTS_HELPERS_HPP_
