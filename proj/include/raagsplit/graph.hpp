#ifndef RAAGSPLIT_GRAPH_HPP_
#define RAAGSPLIT_GRAPH_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raagsplit {

// Index of a vertex in the construction order of its Graph.
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// A set of vertex indices, always sorted ascending and duplicate free.
// Comparison is lexicographic on the sorted index sequence, which is the
// order used for every tie-break in the library.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  const std::vector<Vertex>& members() const noexcept { return items_; }

  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;
  bool is_proper_subset_of(const VertexSet& other) const {
    return size() < other.size() && is_subset_of(other);
  }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet without(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.items_ < b.items_;
  }

 private:
  std::vector<Vertex> items_;
};

// Finite simple undirected graph with uniquely labelled vertices. Immutable
// once constructed.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidArgument on duplicate labels, self-loops or repeated edges,
  // InvalidVertex on out-of-range endpoints.
  Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  static Graph from_labels(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[u * labels_.size() + v] != 0;
  }
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet all_vertices() const;

  // Throws InvalidVertex if s mentions an index outside the graph.
  void check(const VertexSet& s) const;
  std::string describe(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<char> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::unordered_map<std::string, Vertex> index_;
  std::size_t edge_count_ = 0;
};

Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Maps a vertex set of induced_subgraph(g, ambient) back to g's indices.
VertexSet lift(const VertexSet& local, const VertexSet& ambient);

std::vector<VertexSet> components(const Graph& g);
// Components of g with the vertices of removed deleted, in g's indexing.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

VertexSet link(const Graph& g, const VertexSet& s);
VertexSet star(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

// True iff g minus s has at least two components. Graphs with at most one
// vertex count as connected.
bool separates(const Graph& g, const VertexSet& s);

std::size_t clique_number(const Graph& g);
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Every minimal (a,b)-separator for every non-adjacent pair a, b of a
// connected graph; empty for disconnected graphs.
std::vector<VertexSet> minimal_separators(const Graph& g);

// Inclusion-minimal separating cliques. For a disconnected graph this is
// exactly [{}].
std::vector<VertexSet> minimal_clique_separators(const Graph& g);

// Common graph families with vertices labelled v0, v1, ...
Graph complete_graph(std::size_t m);
Graph path_graph(std::size_t m);
Graph cycle_graph(std::size_t m);
Graph empty_graph(std::size_t m);

// Random spanning tree (vertex i attaches to a uniform earlier vertex) plus
// every remaining pair independently with probability density.
Graph random_connected_graph(std::size_t m, double density, std::mt19937_64& rng);

}  // namespace raagsplit

#endif  // RAAGSPLIT_GRAPH_HPP_
