#ifndef RAAGSPLIT_SPLITTING_HPP_
#define RAAGSPLIT_SPLITTING_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "raagsplit/graph.hpp"

namespace raagsplit {

enum class WitnessKind {
  hnn_complete,    // Γ = K_{n+1}; ℤ^{n+1} is an HNN extension over ℤ^n
  direct_amalgam,  // the clique itself separates: A(Γ₁) *_{⟨K⟩} A(Γ₂)
  star_split,      // K = star(u) does not separate; split over ⟨star(u)⟩
};

// Which branch of the case analysis produced a witness. Given the separating
// subset S of the clique K, and the piece S ∪ C containing K:
//   proper_subpiece     K ⊊ S ∪ C, so K separates and gives an amalgam
//   clique_is_piece     K = S ∪ C with S ⊊ K, so K = star(u) for u ∈ K \ S
//   separator_is_clique S = K separates directly
enum class WitnessCase { complete_graph, proper_subpiece, clique_is_piece, separator_is_clique };

struct SplittingWitness {
  WitnessKind kind = WitnessKind::hnn_complete;
  WitnessCase origin = WitnessCase::complete_graph;
  int rank = 0;
  VertexSet clique;                    // K, |K| = rank (all of Γ for hnn_complete)
  std::optional<VertexSet> separator;  // S ⊆ K with Γ - S disconnected
  std::optional<Vertex> star_vertex;   // star_split only
  // direct_amalgam only: Γ₁ ∪ Γ₂ = V(Γ), Γ₁ ∩ Γ₂ = K.
  std::optional<std::pair<VertexSet, VertexSet>> sides;
};

std::string_view to_string(WitnessKind kind);
std::string_view to_string(WitnessCase origin);

// Lexicographically first clique of size n containing s, grown inside
// link(s). Throws InvalidArgument if s is not a clique, InvalidRank if
// n < |s|.
std::optional<VertexSet> extend_clique_to_rank(const Graph& g, const VertexSet& s, int n);

// Decides whether Γ is K_{n+1} or has a size-n clique with a separating
// subset, and returns a witness for the first (lexicographic) such pair.
// Throws InvalidRank for n < 0.
std::optional<SplittingWitness> splits_over_rank(const Graph& g, int n);

// All n >= 0 for which splits_over_rank succeeds, ascending.
std::vector<int> splitting_spectrum(const Graph& g);

// Exhaustive check of the same criterion: every size-n vertex subset that is
// a clique, every subset of it, plain connectivity. Exponential in |V|;
// meant as a test and cross-checking oracle.
bool brute_force_splits(const Graph& g, int n);

// True iff w satisfies the invariants of its kind against g and n.
bool witness_is_sound(const Graph& g, int n, const SplittingWitness& w);

}  // namespace raagsplit

#endif  // RAAGSPLIT_SPLITTING_HPP_
