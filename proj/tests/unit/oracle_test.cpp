#include <gtest/gtest.h>

#include "core/certify.hpp"
#include "core/copies.hpp"
#include "core/error.hpp"
#include "core/oracle.hpp"

using namespace planex;

namespace {

GridSpec grid(std::size_t dimension, std::size_t resolution) {
  GridSpec g;
  g.dimension = dimension;
  g.resolution = resolution;
  return g;
}

}  // namespace

TEST(Inequalities, Aequalb) {
  const InequalityReport r = verify_aequalb(2000, grid(4, 20), 1);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.violations, 0u);
  EXPECT_DOUBLE_EQ(r.max_ratio, 1.0);
  EXPECT_EQ(r.grid_points, 1771u);  // C(23, 3)
}

TEST(Inequalities, Offdiag) {
  const InequalityReport r = verify_offdiag(2000, grid(3, 10), 2);
  EXPECT_TRUE(r.holds());
  EXPECT_DOUBLE_EQ(r.max_ratio, 1.0);
  EXPECT_EQ(r.argmax.size(), 6u);
}

TEST(Inequalities, C4) {
  const InequalityReport r = verify_c4ineq(2000, grid(3, 40), 3);
  EXPECT_TRUE(r.holds());
  EXPECT_DOUBLE_EQ(r.max_ratio, 1.0);
  EXPECT_TRUE(r.equality_exact);
}

TEST(Inequalities, FloatModeAgrees) {
  GridSpec g = grid(3, 24);
  g.mode = GridSpec::Mode::Float;
  EXPECT_TRUE(verify_aequalb(0, g, 1).holds());
  EXPECT_TRUE(verify_c4ineq(0, g, 1).holds());
}

TEST(Inequalities, RejectsBadGrid) { EXPECT_THROW(verify_aequalb(10, grid(2, 1), 1), Error); }

TEST(TwoColor, SmallCycles) {
  const TwoColorReport r = verify_2color(16);
  EXPECT_TRUE(r.methods_agree);
  EXPECT_EQ(r.counterexamples, 0u);
  EXPECT_EQ(r.rows.size(), 15u);
  EXPECT_EQ(r.rows.front().colorings, 4u);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Grid, OptpThreeOnTriangle) {
  const GridResult r = grid_maximize(ObjectiveSpec::path(3), 3, 30);
  EXPECT_NEAR(r.value, 8.0 / 27, 1e-12);  // 1/3 is on the lattice
  EXPECT_GE(r.value + r.gap, 8.0 / 27);
  EXPECT_LE(r.value, 8.0 / 27 + 1e-12);
}

TEST(Grid, NeverExceedsCertifiedUpper) {
  const ObjectiveSpec spec = ObjectiveSpec::blowup(Graph::path(3), 1);
  const GridResult r = grid_maximize(spec, 3, 40);
  EXPECT_LE(r.value, to_double(certified_value(spec).upper) + 1e-12);
}

TEST(Grid, Budget) { EXPECT_THROW(grid_maximize(ObjectiveSpec::path(3), 5, 60, 1000), Error); }

TEST(Extremal, TrianglesInPlanarGraphs) {
  // Maximal planar graphs maximize triangles: 1, 4, 7 for n = 3, 4, 5.
  EXPECT_EQ(exhaustive_extremal(3, Graph::complete(3), {}).max_count, 1u);
  EXPECT_EQ(exhaustive_extremal(4, Graph::complete(3), {}).max_count, 4u);
  EXPECT_EQ(exhaustive_extremal(5, Graph::complete(3), {}).max_count, 7u);
}

TEST(Extremal, ClassCountsAtSmallN) {
  // All 11 graphs on 4 vertices are planar; 34 on 5 vertices minus K5.
  EXPECT_EQ(exhaustive_extremal(4, Graph::complete(2), {}).classes_examined, 11u);
  EXPECT_EQ(exhaustive_extremal(5, Graph::complete(2), {}).classes_examined, 33u);
  EXPECT_EQ(exhaustive_extremal(5, Graph::complete(2), {}).max_count, 9u);
}

TEST(Extremal, MonotoneInN) {
  std::uint64_t previous = 0;
  for (std::size_t n = 4; n <= 6; ++n) {
    const std::uint64_t count = exhaustive_extremal(n, Graph::cycle(4), {}).max_count;
    EXPECT_GE(count, previous);
    previous = count;
  }
}

TEST(Extremal, GclClass) {
  GraphClass cls;
  cls.kind = GraphClass::Kind::Gcl;
  cls.c = Rational(2);
  // K5 is in the class for C = 2, so all 10 triangles are available.
  EXPECT_EQ(exhaustive_extremal(5, Graph::complete(3), cls).max_count, 10u);
}
