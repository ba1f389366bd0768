#ifndef RAAGSPLIT_PRESENTATION_HPP_
#define RAAGSPLIT_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raagsplit/graph.hpp"

namespace raagsplit {

// A generator raised to ±1.
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend bool operator<(const Letter& a, const Letter& b) {
    return a.generator != b.generator ? a.generator < b.generator
                                      : a.exponent < b.exponent;
  }
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);
Word commutator(std::size_t x, std::size_t y);

struct Presentation {
  std::vector<std::string> generators;
  // Freely reduced; commutators of two generators are stored as [x,y] with x
  // before y in generator order.
  std::vector<Word> relators;

  std::optional<std::size_t> find(std::string_view label) const;
  // "<a, b, c | [a,b], [b,c]>"
  std::string to_text() const;
  std::string render(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Amalgamated product factor1 *_E factor2 where E is generated by
// edge_generators and embed1[i], embed2[i] are the images of the i-th edge
// generator in the respective factor.
struct Amalgam {
  Presentation factor1;
  Presentation factor2;
  std::vector<std::string> edge_generators;
  std::vector<Word> embed1;
  std::vector<Word> embed2;

  friend bool operator==(const Amalgam&, const Amalgam&) = default;
};

// Copies of a vertex v in the star factor and the whole-graph factor of a
// star split are named v + kStarCopySuffix and v + kGraphCopySuffix.
inline constexpr std::string_view kStarCopySuffix = "_1";
inline constexpr std::string_view kGraphCopySuffix = "_2";

// If w is [x^p, y^q] for single generators x != y, returns (x, p, y, q).
struct PowerCommutator {
  std::size_t x;
  int x_power;
  std::size_t y;
  int y_power;
};
std::optional<PowerCommutator> as_power_commutator(const Word& w);

// Brings a relator to its stored normal form: free reduction, and [y,x] is
// rewritten as [x,y] when x precedes y.
Word normalize_relator(Word w);

// One generator per vertex, one commutator per edge, both in graph order.
Presentation raag_presentation(const Graph& g);

// Vertex set generating the normaliser (and commensurator) of the special
// subgroup ⟨s⟩, which is star(s).
VertexSet normalizer_of_special(const Graph& g, const VertexSet& s);

// Splitting A(Γ₁) *_{⟨s⟩} A(Γ₂) along a separating clique s, with Γ₁ = s ∪ the
// first component of Γ - s and Γ₂ = s ∪ the rest. Throws InvalidArgument
// unless s is a separating clique.
Amalgam direct_amalgam(const Graph& g, const VertexSet& s);

// A(star(u)) *_{⟨star(u)⟩} A(Γ) with u ↦ u_1², v ↦ v_1 on the star side and
// v ↦ v_2 on the graph side. Throws StarIsWholeGraph when star(u) = V(Γ).
Amalgam star_split(const Graph& g, Vertex u);

// Rewrites the amalgam's presentation by the Tietze moves of the star split
// and compares with raag_presentation(g). Throws InvalidArgument for
// amalgams whose embeddings do not match their factors.
bool verify_star_split(const Graph& g, const Amalgam& a);

}  // namespace raagsplit

#endif  // RAAGSPLIT_PRESENTATION_HPP_
