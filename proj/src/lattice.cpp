#include "raagsplit/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

#include "raagsplit/error.hpp"

namespace raagsplit {

std::string_view to_string(SubsetShape shape) {
  switch (shape) {
    case SubsetShape::half_line:
      return "half-line";
    case SubsetShape::line:
      return "line";
    case SubsetShape::half_hyperplane:
      return "half-hyperplane";
    case SubsetShape::hyperplane:
      return "hyperplane";
  }
  return "unknown";
}

std::optional<SubsetShape> shape_from_string(std::string_view name) {
  for (auto s : {SubsetShape::half_line, SubsetShape::line, SubsetShape::half_hyperplane,
                 SubsetShape::hyperplane}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::separates ? "separates" : "does-not-separate";
}

namespace {

// Mixed-radix indexing of [-R, R]^n, first coordinate most significant.
class Box {
 public:
  Box(int rank, int radius)
      : rank_(static_cast<std::size_t>(rank)),
        radius_(radius),
        side_(2 * static_cast<std::size_t>(radius) + 1) {
    size_ = 1;
    for (std::size_t i = 0; i < rank_; ++i) size_ *= side_;
    stride_.assign(rank_, 1);
    for (std::size_t i = rank_; i-- > 1;) stride_[i - 1] = stride_[i] * side_;
  }

  std::size_t size() const { return size_; }

  bool inside(const LatticePoint& p) const {
    return std::all_of(p.begin(), p.end(),
                       [&](std::int64_t x) { return x >= -radius_ && x <= radius_; });
  }

  std::size_t index(const LatticePoint& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
      idx += static_cast<std::size_t>(p[i] + radius_) * stride_[i];
    }
    return idx;
  }

  LatticePoint point(std::size_t idx) const {
    LatticePoint p(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      p[i] = static_cast<std::int64_t>(idx / stride_[i]) - radius_;
      idx %= stride_[i];
    }
    return p;
  }

  template <typename F>
  void for_each_neighbor(std::size_t idx, F&& f) const {
    for (std::size_t i = 0; i < rank_; ++i) {
      const std::size_t coord = (idx / stride_[i]) % side_;
      if (coord > 0) f(idx - stride_[i]);
      if (coord + 1 < side_) f(idx + stride_[i]);
    }
  }

 private:
  std::size_t rank_;
  std::int64_t radius_;
  std::size_t side_;
  std::size_t size_;
  std::vector<std::size_t> stride_;
};

// Integer row echelon form with positive pivots; zero rows dropped.
std::vector<LatticePoint> echelon(std::vector<LatticePoint> rows, std::size_t dim) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] != 0 &&
            (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool reduced = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        const std::int64_t q = rows[i][col] / rows[r][col];
        for (std::size_t c = 0; c < dim; ++c) rows[i][c] -= q * rows[r][c];
        if (rows[i][col] != 0) reduced = false;
      }
      if (reduced) {
        if (rows[r][col] < 0) {
          for (auto& x : rows[r]) x = -x;
        }
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Each basis row fixes its pivot coordinate once chosen, which bounds its
// coefficient to the range keeping that coordinate inside the box.
void enumerate_span(const std::vector<LatticePoint>& basis,
                    const std::vector<std::size_t>& pivots, std::size_t row,
                    LatticePoint& partial, std::int64_t radius, const Box& box,
                    std::vector<LatticePoint>& out) {
  if (row == basis.size()) {
    if (box.inside(partial)) out.push_back(partial);
    return;
  }
  const std::size_t p = pivots[row];
  const std::int64_t piv = basis[row][p];
  const std::int64_t lo = ceil_div(-radius - partial[p], piv);
  const std::int64_t hi = floor_div(radius - partial[p], piv);
  for (std::int64_t c = lo; c <= hi; ++c) {
    for (std::size_t i = 0; i < partial.size(); ++i) partial[i] += c * basis[row][i];
    enumerate_span(basis, pivots, row + 1, partial, radius, box, out);
    for (std::size_t i = 0; i < partial.size(); ++i) partial[i] -= c * basis[row][i];
  }
}

bool in_shape(SubsetShape shape, const LatticePoint& p) {
  const std::size_t n = p.size();
  switch (shape) {
    case SubsetShape::line:
    case SubsetShape::half_line:
      for (std::size_t i = 1; i < n; ++i) {
        if (p[i] != 0) return false;
      }
      return shape == SubsetShape::line || p[0] >= 0;
    case SubsetShape::hyperplane:
    case SubsetShape::half_hyperplane:
      if (p[n - 1] != 0) return false;
      return shape == SubsetShape::hyperplane || p[0] >= 0;
  }
  return false;
}

}  // namespace

void validate_scenario(const LatticeScenario& sc) {
  if (sc.ambient_rank < 1) throw InvalidArgument("ambient rank must be at least 1");
  if (sc.ambient_rank > kMaxAmbientRank) {
    throw ScenarioTooLarge("ambient rank " + std::to_string(sc.ambient_rank) +
                           " exceeds " + std::to_string(kMaxAmbientRank));
  }
  if (sc.box_radius < 1) throw InvalidArgument("box radius must be at least 1");
  if (sc.box_radius > kMaxBoxRadius) {
    throw ScenarioTooLarge("box radius " + std::to_string(sc.box_radius) + " exceeds " +
                           std::to_string(kMaxBoxRadius));
  }
  std::size_t points = 1;
  for (int i = 0; i < sc.ambient_rank; ++i) points *= 2 * static_cast<std::size_t>(sc.box_radius) + 1;
  if (points > kMaxBoxPoints) {
    throw ScenarioTooLarge("box has " + std::to_string(points) + " points, limit is " +
                           std::to_string(kMaxBoxPoints));
  }
  if (sc.thickening < 0) throw InvalidArgument("thickening must be non-negative");
  if (sc.depth < 1) throw InvalidArgument("depth must be at least 1");
  if (sc.depth + sc.thickening >= sc.box_radius) {
    throw InvalidArgument("depth + thickening must be below the box radius");
  }
  if (const auto* sub = std::get_if<Subgroup>(&sc.subset)) {
    for (const auto& v : sub->generators) {
      if (v.size() != static_cast<std::size_t>(sc.ambient_rank)) {
        throw InvalidArgument("generator length does not match the ambient rank");
      }
      for (auto x : v) {
        if (std::llabs(x) > 4 * kMaxBoxRadius) {
          throw InvalidArgument("generator entries are limited to +-" +
                                std::to_string(4 * kMaxBoxRadius));
        }
      }
    }
  }
}

std::vector<LatticePoint> subset_points(const LatticeScenario& sc) {
  validate_scenario(sc);
  const Box box(sc.ambient_rank, sc.box_radius);
  const auto dim = static_cast<std::size_t>(sc.ambient_rank);
  std::vector<LatticePoint> out;
  if (const auto* sub = std::get_if<Subgroup>(&sc.subset)) {
    const auto basis = echelon(sub->generators, dim);
    std::vector<std::size_t> pivots;
    for (const auto& row : basis) {
      pivots.push_back(static_cast<std::size_t>(
          std::find_if(row.begin(), row.end(), [](std::int64_t x) { return x != 0; }) -
          row.begin()));
    }
    LatticePoint partial(dim, 0);
    enumerate_span(basis, pivots, 0, partial, sc.box_radius, box, out);
    std::sort(out.begin(), out.end(), [&](const LatticePoint& a, const LatticePoint& b) {
      return box.index(a) < box.index(b);
    });
  } else {
    const SubsetShape shape = std::get<SubsetShape>(sc.subset);
    for (std::size_t i = 0; i < box.size(); ++i) {
      LatticePoint p = box.point(i);
      if (in_shape(shape, p)) out.push_back(std::move(p));
    }
  }
  return out;
}

SeparationReport deep_components(const LatticeScenario& sc) {
  const auto sources = subset_points(sc);
  const Box box(sc.ambient_rank, sc.box_radius);
  constexpr std::int64_t kUnseen = -1;

  // The box is ℓ¹-convex, so grid BFS distances equal ℓ¹ distances to the
  // subset's points inside the box.
  std::vector<std::int64_t> dist(box.size(), kUnseen);
  std::deque<std::size_t> queue;
  for (const auto& p : sources) {
    const std::size_t idx = box.index(p);
    dist[idx] = 0;
    queue.push_back(idx);
  }
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    box.for_each_neighbor(idx, [&](std::size_t next) {
      if (dist[next] == kUnseen) {
        dist[next] = dist[idx] + 1;
        queue.push_back(next);
      }
    });
  }

  SeparationReport report;
  std::vector<char> visited(box.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < box.size(); ++root) {
    if (visited[root] || dist[root] <= sc.thickening) continue;
    ++report.total_components;
    std::size_t size = 0;
    std::size_t witness = std::numeric_limits<std::size_t>::max();
    visited[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t idx = stack.back();
      stack.pop_back();
      ++size;
      if (dist[idx] >= sc.depth) witness = std::min(witness, idx);
      box.for_each_neighbor(idx, [&](std::size_t next) {
        if (!visited[next] && dist[next] > sc.thickening) {
          visited[next] = 1;
          stack.push_back(next);
        }
      });
    }
    if (witness != std::numeric_limits<std::size_t>::max()) {
      ++report.deep_components;
      report.deep_witnesses.push_back({box.point(witness), dist[witness], size});
    }
  }
  return report;
}

int default_box_radius(int ambient_rank) {
  if (ambient_rank <= 2) return 32;
  if (ambient_rank == 3) return 16;
  return 8;
}

namespace {

LatticeScenario with_params(int n, const LatticeParams& params) {
  LatticeScenario sc;
  sc.ambient_rank = n;
  sc.box_radius = params.box_radius.value_or(default_box_radius(n));
  sc.thickening = params.thickening.value_or(1);
  sc.depth = params.depth.value_or(sc.box_radius / 4);
  return sc;
}

LatticeVerdict run(LatticeScenario sc) {
  LatticeVerdict out;
  out.report = deep_components(sc);
  out.verdict =
      out.report.deep_components >= 2 ? Verdict::separates : Verdict::does_not_separate;
  out.scenario = std::move(sc);
  return out;
}

}  // namespace

LatticeVerdict check_rank_separation(int n, int k, const LatticeParams& params) {
  if (n < 1 || k < 0 || k > n) {
    throw InvalidArgument("need 0 <= k <= n and n >= 1");
  }
  if (n > kMaxAmbientRank) {
    throw ScenarioTooLarge("ambient rank " + std::to_string(n) + " exceeds " +
                           std::to_string(kMaxAmbientRank));
  }
  LatticeScenario sc = with_params(n, params);
  Subgroup sub;
  for (int i = 0; i < k; ++i) {
    LatticePoint e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    sub.generators.push_back(std::move(e));
  }
  sc.subset = std::move(sub);
  return run(std::move(sc));
}

LatticeVerdict quasi_density_check(int n, const LatticeParams& params, SubsetShape shape) {
  if (n < 2) throw InvalidArgument("the quasi-density check needs n >= 2");
  if (n > kMaxAmbientRank) {
    throw ScenarioTooLarge("ambient rank " + std::to_string(n) + " exceeds " +
                           std::to_string(kMaxAmbientRank));
  }
  LatticeScenario sc = with_params(n, params);
  sc.subset = shape;
  return run(std::move(sc));
}

}  // namespace raagsplit
