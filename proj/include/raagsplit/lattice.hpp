#ifndef RAAGSPLIT_LATTICE_HPP_
#define RAAGSPLIT_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace raagsplit {

using LatticePoint = std::vector<std::int64_t>;

// Fixed subsets of ℤⁿ, all through the origin:
//   line             x_2 = ... = x_n = 0
//   half_line        the line with x_1 >= 0
//   hyperplane       x_n = 0
//   half_hyperplane  the hyperplane with x_1 >= 0
enum class SubsetShape { half_line, line, half_hyperplane, hyperplane };

std::string_view to_string(SubsetShape shape);
std::optional<SubsetShape> shape_from_string(std::string_view name);

// Subgroup of ℤⁿ spanned by integer vectors (possibly dependent, possibly
// none, which gives the trivial subgroup).
struct Subgroup {
  std::vector<LatticePoint> generators;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

// Finite-box proxy for coarse separation: the box [-R, R]^n with ℓ¹ unit
// edges, minus every point within ℓ¹-distance `thickening` of the subset. A
// component is deep if it reaches ℓ¹-distance `depth` from the subset.
struct LatticeScenario {
  int ambient_rank = 2;
  std::variant<Subgroup, SubsetShape> subset = Subgroup{};
  int box_radius = 32;
  int thickening = 1;
  int depth = 8;

  friend bool operator==(const LatticeScenario&, const LatticeScenario&) = default;
};

inline constexpr int kMaxAmbientRank = 4;
inline constexpr int kMaxBoxRadius = 64;
inline constexpr std::size_t kMaxBoxPoints = std::size_t{1} << 25;

struct DeepWitness {
  LatticePoint point;  // first point of the component, in box order, at distance >= depth
  std::int64_t distance = 0;
  std::size_t component_size = 0;

  friend bool operator==(const DeepWitness&, const DeepWitness&) = default;
};

struct SeparationReport {
  std::size_t total_components = 0;
  std::size_t deep_components = 0;
  std::vector<DeepWitness> deep_witnesses;

  friend bool operator==(const SeparationReport&, const SeparationReport&) = default;
};

// Throws ScenarioTooLarge when the rank, radius or point count exceed the
// limits above, InvalidArgument for otherwise inconsistent scenarios
// (depth + thickening >= radius, wrong vector lengths, ...).
void validate_scenario(const LatticeScenario& sc);

// Points of the subset inside the box, in box order.
std::vector<LatticePoint> subset_points(const LatticeScenario& sc);

SeparationReport deep_components(const LatticeScenario& sc);

enum class Verdict { separates, does_not_separate };
std::string_view to_string(Verdict v);

struct LatticeParams {
  std::optional<int> box_radius;
  std::optional<int> thickening;
  std::optional<int> depth;
};

struct LatticeVerdict {
  Verdict verdict = Verdict::does_not_separate;
  LatticeScenario scenario;
  SeparationReport report;
};

// Radius 32 for n <= 2, 16 for n = 3, 8 for n = 4.
int default_box_radius(int ambient_rank);

// Runs the box experiment on span{e_1, ..., e_k} in ℤⁿ (default thickening 1,
// depth R/4). Separates iff at least two deep components survive.
LatticeVerdict check_rank_separation(int n, int k, const LatticeParams& params = {});

// Runs the box experiment on a subset of the hyperplane x_n = 0, by default
// the half-hyperplane x_1 >= 0, which is not quasi-dense in it. The check
// passes when the verdict is does_not_separate.
LatticeVerdict quasi_density_check(int n, const LatticeParams& params = {},
                                   SubsetShape shape = SubsetShape::half_hyperplane);

}  // namespace raagsplit

#endif  // RAAGSPLIT_LATTICE_HPP_
