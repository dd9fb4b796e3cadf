#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/objective.hpp"
#include "core/rational.hpp"

namespace planex {

struct GridSpec {
  enum class Mode { Float, Rational };

  std::size_t dimension = 2;
  std::size_t resolution = 40;  // lattice spacing 1/resolution
  Mode mode = Mode::Rational;
};

struct InequalityReport {
  std::string name;
  std::size_t random_samples = 0;
  std::size_t grid_points = 0;
  std::size_t violations = 0;
  double max_ratio = 0;            // max LHS / RHS
  std::vector<double> argmax;      // for two-vector inequalities: a then b
  std::string equality_case;
  bool equality_exact = false;     // ratio is exactly 1 there, in rationals
  bool holds() const { return violations == 0 && equality_exact; }
};

// (sum a^2)^2 - sum a^4 <= (sum a)^4 / 8
InequalityReport verify_aequalb(std::size_t samples, const GridSpec& grid, std::uint64_t seed);
// (sum ab)^2 - sum a^2 b^2 <= (sum a)^2 (sum b)^2 / 8
InequalityReport verify_offdiag(std::size_t samples, const GridSpec& grid, std::uint64_t seed);
// a1^2 a2^2 + a2^2 a3^2 + a3^2 a1^2 <= ((a1 + a2 + a3) / 2)^4; grid.dimension is ignored.
InequalityReport verify_c4ineq(std::size_t samples, const GridSpec& grid, std::uint64_t seed);

struct TwoColorRow {
  std::size_t m = 0;
  std::uint64_t colorings = 0;
  std::uint64_t counterexamples_scan = 0;
  std::uint64_t counterexamples_bitmask = 0;
};

struct TwoColorReport {
  std::vector<TwoColorRow> rows;
  std::uint64_t colorings = 0;
  std::uint64_t counterexamples = 0;
  bool methods_agree = true;
  std::optional<std::pair<std::size_t, std::uint32_t>> witness;  // (m, coloring bits)
  bool holds() const { return counterexamples == 0 && methods_agree; }
};

/// Every coloring of Z/m with m in [2, m_max] has some i with
/// c(i) = c(i+2) = 0 or c(i) = c(i+3) = 1.
TwoColorReport verify_2color(std::size_t m_max);

struct GridResult {
  double value = 0;              // max over lattice points
  std::vector<double> argmax;    // pair weights, pair_index order
  double gap = 0;                // true max on this ground size <= value + gap
  std::uint64_t points = 0;
};

/// Exhaustive lattice search over {v / resolution} on the simplex of pairs.
/// Throws Error(Budget) when the lattice has more than `budget` points.
GridResult grid_maximize(const ObjectiveSpec& spec, std::size_t ground, std::size_t resolution,
                         std::uint64_t budget = 5'000'000);

struct GraphClass {
  enum class Kind { Planar, Gcl };

  Kind kind = Kind::Planar;
  Rational c = 3;
};

struct ExtremalSearchResult {
  std::uint64_t max_count = 0;
  Graph argmax;
  std::size_t classes_examined = 0;  // isomorphism classes on n vertices in the class
};

/// Maximum number of copies of h over all n-vertex graphs in the class,
/// n <= 7, by canonical augmentation.
ExtremalSearchResult exhaustive_extremal(std::size_t n, const Graph& h, const GraphClass& cls);

}  // namespace planex
