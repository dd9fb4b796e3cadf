#include "core/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "core/copies.hpp"
#include "core/error.hpp"
#include "core/gcl.hpp"
#include "core/graph_io.hpp"
#include "core/mass.hpp"
#include "core/planarity.hpp"

namespace planex {
namespace {

// Calls visit(v) for every v in N^parts with sum(v) == total.
void for_each_composition(std::size_t total, std::size_t parts,
                          const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> v(parts, 0);
  auto place = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == parts) {
      v[i] = left;
      visit(v);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      v[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (parts > 0) place(place, 0, static_cast<std::int64_t>(total));
}

struct Sides {
  double lhs;
  double rhs;
};

Sides aequalb_sides(const std::vector<double>& a) {
  double s1 = 0, s2 = 0, s4 = 0;
  for (double x : a) {
    s1 += x;
    s2 += x * x;
    s4 += x * x * x * x;
  }
  return {s2 * s2 - s4, s1 * s1 * s1 * s1 / 8};
}

Sides offdiag_sides(const std::vector<double>& a, const std::vector<double>& b) {
  double sa = 0, sb = 0, sab = 0, sq = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    sab += a[i] * b[i];
    sq += a[i] * a[i] * b[i] * b[i];
  }
  return {sab * sab - sq, sa * sa * sb * sb / 8};
}

Sides c4_sides(const std::vector<double>& a) {
  const double p = a[0] * a[0], q = a[1] * a[1], r = a[2] * a[2];
  const double half = (a[0] + a[1] + a[2]) / 2;
  return {p * q + q * r + r * p, half * half * half * half};
}

Rational aequalb_ratio_exact(const std::vector<Rational>& a) {
  Rational s1 = 0, s2 = 0, s4 = 0;
  for (const Rational& x : a) {
    s1 += x;
    s2 += x * x;
    s4 += x * x * x * x;
  }
  return (s2 * s2 - s4) / (s1 * s1 * s1 * s1 / 8);
}

Rational offdiag_ratio_exact(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational sa = 0, sb = 0, sab = 0, sq = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    sab += a[i] * b[i];
    sq += a[i] * a[i] * b[i] * b[i];
  }
  return (sab * sab - sq) / (sa * sa * sb * sb / 8);
}

Rational c4_ratio_exact(const std::vector<Rational>& a) {
  const Rational p = a[0] * a[0], q = a[1] * a[1], r = a[2] * a[2];
  const Rational half = (a[0] + a[1] + a[2]) / 2;
  return (p * q + q * r + r * p) / (half * half * half * half);
}

class Tracker {
 public:
  explicit Tracker(InequalityReport& report) : report_(report) {}

  void record(double lhs, double rhs, const std::vector<double>& point) {
    if (lhs > rhs * (1 + 1e-12) + std::numeric_limits<double>::min()) ++report_.violations;
    const double ratio = rhs > 0 ? lhs / rhs : (lhs > 0 ? std::numeric_limits<double>::infinity() : 0);
    if (report_.argmax.empty() || ratio > report_.max_ratio) {
      report_.max_ratio = ratio;
      report_.argmax = point;
    }
  }

  // Exact integer comparison lhs <= rhs at a lattice point.
  void record_exact(std::int64_t lhs, std::int64_t rhs, const std::vector<double>& point) {
    if (lhs > rhs) ++report_.violations;
    const double ratio = rhs > 0 ? static_cast<double>(lhs) / static_cast<double>(rhs) : 0;
    if (report_.argmax.empty() || ratio > report_.max_ratio) {
      report_.max_ratio = ratio;
      report_.argmax = point;
    }
  }

 private:
  InequalityReport& report_;
};

std::vector<double> scaled(const std::vector<std::int64_t>& v, std::size_t r) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<double>(v[i]) / static_cast<double>(r);
  return out;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> a(n);
  for (double& x : a) x = unit(rng) < 0.3 ? 0.0 : unit(rng);
  return a;
}

std::size_t random_dimension(std::mt19937_64& rng, std::size_t max_dim) {
  return std::uniform_int_distribution<std::size_t>(1, max_dim)(rng);
}

void check_grid(const GridSpec& grid) {
  require(grid.resolution >= 2, ErrorKind::InvalidArgument, "grid resolution must be at least 2");
  require(grid.resolution <= 2000, ErrorKind::InvalidArgument, "grid resolution too large for exact mode");
  require(grid.dimension >= 1, ErrorKind::InvalidArgument, "grid dimension must be at least 1");
}

}  // namespace

InequalityReport verify_aequalb(std::size_t samples, const GridSpec& grid, std::uint64_t seed) {
  check_grid(grid);
  InequalityReport report;
  report.name = "aequalb";
  Tracker track(report);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = random_vector(rng, random_dimension(rng, 6));
    const Sides sides = aequalb_sides(a);
    track.record(sides.lhs, sides.rhs, a);
  }
  report.random_samples = samples;

  const auto r = static_cast<std::int64_t>(grid.resolution);
  const std::int64_t r4 = r * r * r * r;
  for_each_composition(grid.resolution, grid.dimension, [&](const std::vector<std::int64_t>& v) {
    ++report.grid_points;
    if (grid.mode == GridSpec::Mode::Rational) {
      std::int64_t s2 = 0, s4 = 0;
      for (std::int64_t x : v) {
        s2 += x * x;
        s4 += x * x * x * x;
      }
      track.record_exact(8 * (s2 * s2 - s4), r4, scaled(v, grid.resolution));
    } else {
      const auto a = scaled(v, grid.resolution);
      const Sides sides = aequalb_sides(a);
      track.record(sides.lhs, sides.rhs, a);
    }
  });

  const Rational half(1, 2);
  report.equality_case = "a = (1/2, 1/2)";
  report.equality_exact = aequalb_ratio_exact({half, half}) == 1;
  return report;
}

InequalityReport verify_offdiag(std::size_t samples, const GridSpec& grid, std::uint64_t seed) {
  check_grid(grid);
  InequalityReport report;
  report.name = "offdiag";
  Tracker track(report);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = random_dimension(rng, 6);
    const auto a = random_vector(rng, n);
    const auto b = random_vector(rng, n);
    const Sides sides = offdiag_sides(a, b);
    std::vector<double> point = a;
    point.insert(point.end(), b.begin(), b.end());
    track.record(sides.lhs, sides.rhs, point);
  }
  report.random_samples = samples;

  std::vector<std::vector<std::int64_t>> lattice;
  for_each_composition(grid.resolution, grid.dimension,
                       [&](const std::vector<std::int64_t>& v) { lattice.push_back(v); });
  const auto r = static_cast<std::int64_t>(grid.resolution);
  const std::int64_t r4 = r * r * r * r;
  const std::size_t d = grid.dimension;
  // Track the worst pair by index and materialize its witness once at the end.
  std::size_t worst_a = 0, worst_b = 0;
  std::int64_t worst_lhs = -1;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& a = lattice[i];
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      const auto& b = lattice[j];
      std::int64_t lhs;
      if (grid.mode == GridSpec::Mode::Rational) {
        std::int64_t sab = 0, sq = 0;
        for (std::size_t t = 0; t < d; ++t) {
          const std::int64_t p = a[t] * b[t];
          sab += p;
          sq += p * p;
        }
        lhs = 8 * (sab * sab - sq);
        if (lhs > r4) ++report.violations;
      } else {
        const Sides sides = offdiag_sides(scaled(a, grid.resolution), scaled(b, grid.resolution));
        if (sides.lhs > sides.rhs * (1 + 1e-12)) ++report.violations;
        lhs = static_cast<std::int64_t>(sides.lhs / sides.rhs * static_cast<double>(r4));
      }
      if (lhs > worst_lhs) {
        worst_lhs = lhs;
        worst_a = i;
        worst_b = j;
      }
    }
  }
  report.grid_points = lattice.size() * lattice.size();
  if (!lattice.empty()) {
    const double grid_ratio = static_cast<double>(worst_lhs) / static_cast<double>(r4);
    if (grid_ratio >= report.max_ratio) {
      report.max_ratio = grid_ratio;
      report.argmax = scaled(lattice[worst_a], grid.resolution);
      const auto b = scaled(lattice[worst_b], grid.resolution);
      report.argmax.insert(report.argmax.end(), b.begin(), b.end());
    }
  }

  const Rational half(1, 2);
  report.equality_case = "a = b = (1/2, 1/2)";
  report.equality_exact = offdiag_ratio_exact({half, half}, {half, half}) == 1;
  return report;
}

InequalityReport verify_c4ineq(std::size_t samples, const GridSpec& grid, std::uint64_t seed) {
  check_grid(grid);
  InequalityReport report;
  report.name = "c4ineq";
  Tracker track(report);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = random_vector(rng, 3);
    const Sides sides = c4_sides(a);
    track.record(sides.lhs, sides.rhs, a);
  }
  report.random_samples = samples;

  const auto r = static_cast<std::int64_t>(grid.resolution);
  const std::int64_t r4 = r * r * r * r;
  for_each_composition(grid.resolution, 3, [&](const std::vector<std::int64_t>& v) {
    ++report.grid_points;
    if (grid.mode == GridSpec::Mode::Rational) {
      const std::int64_t p = v[0] * v[0], q = v[1] * v[1], s = v[2] * v[2];
      track.record_exact(16 * (p * q + q * s + s * p), r4, scaled(v, grid.resolution));
    } else {
      const auto a = scaled(v, grid.resolution);
      const Sides sides = c4_sides(a);
      track.record(sides.lhs, sides.rhs, a);
    }
  });

  const Rational half(1, 2);
  report.equality_case = "a = (1/2, 1/2, 0)";
  report.equality_exact = c4_ratio_exact({half, half, Rational(0)}) == 1;
  return report;
}

TwoColorReport verify_2color(std::size_t m_max) {
  require(m_max >= 2, ErrorKind::InvalidArgument, "2color: m_max must be at least 2");
  require(m_max <= 30, ErrorKind::Unsupported, "2color: m_max above 30 is not supported");
  TwoColorReport report;
  for (std::size_t m = 2; m <= m_max; ++m) {
    TwoColorRow row;
    row.m = m;
    const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    // Bit i of rot(x, s) is bit (i + s) mod m of x.
    auto rot = [&](std::uint32_t x, std::size_t s) {
      s %= m;
      if (s == 0) return x;
      return ((x >> s) | (x << (m - s))) & full;
    };
    for (std::uint32_t chi = 0; chi <= full; ++chi) {
      ++row.colorings;
      bool found = false;
      for (std::size_t i = 0; i < m && !found; ++i) {
        const bool c0 = chi >> i & 1u, c2 = chi >> ((i + 2) % m) & 1u, c3 = chi >> ((i + 3) % m) & 1u;
        found = (!c0 && !c2) || (c0 && c3);
      }
      if (!found) {
        ++row.counterexamples_scan;
        if (!report.witness) report.witness = {{m, chi}};
      }
      const std::uint32_t zeros = ~chi & full;
      if (((zeros & rot(zeros, 2)) | (chi & rot(chi, 3))) == 0) ++row.counterexamples_bitmask;
      if (chi == full) break;
    }
    report.colorings += row.colorings;
    report.counterexamples += row.counterexamples_scan;
    report.methods_agree = report.methods_agree && row.counterexamples_scan == row.counterexamples_bitmask;
    report.rows.push_back(row);
  }
  return report;
}

GridResult grid_maximize(const ObjectiveSpec& spec, std::size_t ground, std::size_t resolution,
                         std::uint64_t budget) {
  require(resolution >= 2, ErrorKind::InvalidArgument, "grid resolution must be at least 2");
  const CompiledObjective<double> objective(spec, ground);
  const std::size_t dim = objective.dimension();
  require(dim >= 1, ErrorKind::InvalidArgument, "grid needs at least one pair");
  const BigInt points = binomial(static_cast<unsigned>(resolution + dim - 1), static_cast<unsigned>(dim - 1));
  require(points <= budget, ErrorKind::Budget,
          "grid has " + points.str() + " points, budget is " + std::to_string(budget));

  GridResult out;
  out.points = points.convert_to<std::uint64_t>();
  const double r = static_cast<double>(resolution);
  const double spread = static_cast<double>(dim) / (2 * r);
  std::vector<double> w(dim), shifted(dim), grad;
  double upper = 0;
  bool first = true;
  // For any simplex point x, its largest-remainder rounding y satisfies
  // sum (x - y)^+ <= dim / (2r) and x <= y + 1/r; partials are monotone, so
  // f(x) <= f(y) + dim/(2r) * max_e df/de (min(y + 1/r, 1)).
  for_each_composition(resolution, dim, [&](const std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < dim; ++i) {
      w[i] = static_cast<double>(v[i]) / r;
      shifted[i] = std::min(w[i] + 1 / r, 1.0);
    }
    const double value = objective.value(w);
    objective.value_and_gradient(shifted, grad);
    const double bound = value + spread * *std::max_element(grad.begin(), grad.end());
    upper = std::max(upper, bound);
    if (first || value > out.value) {
      out.value = value;
      out.argmax = w;
      first = false;
    }
  });
  out.gap = upper - out.value;
  return out;
}

ExtremalSearchResult exhaustive_extremal(std::size_t n, const Graph& h, const GraphClass& cls) {
  require(n >= 1, ErrorKind::InvalidArgument, "exhaustive search needs n >= 1");
  require(n <= 7, ErrorKind::Unsupported, "exhaustive search is limited to n <= 7");
  require(h.vertex_count() >= 1, ErrorKind::InvalidArgument, "pattern needs a vertex");

  auto in_class = [&](const Graph& g) {
    return cls.kind == GraphClass::Kind::Planar ? is_planar_small(g) : gcl_membership(g, cls.c).member;
  };

  // Both classes are closed under taking subgraphs, so every member on v+1
  // vertices arises by adding a vertex to a member on v vertices.
  std::map<std::string, Graph> level;
  level.emplace(to_graph6(Graph(1)), Graph(1));
  for (std::size_t v = 1; v < n; ++v) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      for (std::uint32_t subset = 0; subset < (1u << v); ++subset) {
        std::vector<Edge> edges = g.edges();
        for (Vertex u = 0; u < v; ++u)
          if (subset >> u & 1u) edges.push_back({u, static_cast<Vertex>(v)});
        const Graph canonical = canonical_form(Graph(v + 1, edges));
        next.emplace(to_graph6(canonical), canonical);
      }
    }
    level.clear();
    for (auto& [key, g] : next)
      if (in_class(g)) level.emplace(key, std::move(g));
  }

  ExtremalSearchResult out;
  out.classes_examined = level.size();
  bool first = true;
  for (const auto& [key, g] : level) {
    const std::uint64_t count = h.vertex_count() <= n ? count_copies(g, h) : 0;
    if (first || count > out.max_count) {
      out.max_count = count;
      out.argmax = g;
      first = false;
    }
  }
  return out;
}

}  // namespace planex
