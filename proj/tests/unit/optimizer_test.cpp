#include <gtest/gtest.h>

#include <cmath>

#include "core/certify.hpp"
#include "core/optimizer.hpp"

using namespace planex;

namespace {

OptimizerConfig quick(std::size_t restarts = 8) {
  OptimizerConfig c;
  c.restarts = restarts;
  c.seed = 7;
  return c;
}

}  // namespace

TEST(Sweep, Defaults) {
  bool heuristic = false;
  EXPECT_EQ(default_sweep(ObjectiveSpec::path(3), heuristic), (std::pair<std::size_t, std::size_t>{3, 6}));
  EXPECT_TRUE(heuristic);
  EXPECT_EQ(default_sweep(ObjectiveSpec::blowup(Graph::complete(3), 1), heuristic),
            (std::pair<std::size_t, std::size_t>{3, 6}));
  EXPECT_FALSE(heuristic);
  default_sweep(ObjectiveSpec::blowup(Graph::path(4), 1), heuristic);
  EXPECT_TRUE(heuristic);
}

TEST(SeedMass, IsFeasible) {
  EXPECT_DOUBLE_EQ(eval_optp(seed_mass(ObjectiveSpec::path(2), 2), 2), 2.0);
  EXPECT_NEAR(eval_optp(seed_mass(ObjectiveSpec::path(3), 4), 3), 8.0 / 27, 1e-15);
  EXPECT_NEAR(eval_optb(seed_mass(ObjectiveSpec::blowup(Graph::cycle(4), 1), 5), Graph::cycle(4), 1), 1.0 / 256, 1e-15);
}

TEST(Ascend, ReachesTriangleFromInterior) {
  const CompiledObjective<double> f(ObjectiveSpec::path(3), 3);
  const AscentResult r = ascend(f, {0.5, 0.3, 0.2}, quick());
  EXPECT_NEAR(r.value, 8.0 / 27, 1e-10);
  EXPECT_TRUE(r.converged);
}

TEST(Maximize, Optp2) {
  OptimizerConfig c = quick();
  c.min_ground = 2;
  c.max_ground = 5;
  const OptResult r = maximize(ObjectiveSpec::path(2), c);
  EXPECT_NEAR(r.value, 2.0, 1e-9);
  EXPECT_LT(r.kkt_residual, 1e-6);
}

TEST(Maximize, Optp3) {
  const OptResult r = maximize(ObjectiveSpec::path(3), quick());
  EXPECT_NEAR(r.value, 8.0 / 27, 1e-9);
  EXPECT_LT(r.kkt_residual, 1e-6);
  EXPECT_TRUE(r.sweep_heuristic);
  EXPECT_EQ(support_graph(r.best_mass).edge_count(), 3u);
}

TEST(Maximize, TriangleBlowup) {
  const OptResult r = maximize(ObjectiveSpec::blowup(Graph::complete(3), 1), quick());
  EXPECT_NEAR(r.value, 1.0 / 27, 1e-10);
  EXPECT_FALSE(r.sweep_heuristic);
  EXPECT_LT(r.kkt_residual, 1e-6);
}

TEST(Maximize, ReproducibleUnderFixedSeed) {
  const OptResult a = maximize(ObjectiveSpec::blowup(Graph::cycle(4), 1), quick(6));
  const OptResult b = maximize(ObjectiveSpec::blowup(Graph::cycle(4), 1), quick(6));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.best_mass.weights(), b.best_mass.weights());
}

TEST(Maximize, ThreadsDoNotChangeTheResult) {
  OptimizerConfig c = quick(6);
  const OptResult serial = maximize(ObjectiveSpec::blowup(Graph::complete(3), 1), c);
  c.threads = 4;
  const OptResult parallel = maximize(ObjectiveSpec::blowup(Graph::complete(3), 1), c);
  EXPECT_EQ(serial.value, parallel.value);
  EXPECT_EQ(serial.best_mass.weights(), parallel.best_mass.weights());
}

TEST(Maximize, StarSupremumIsFlagged) {
  OptimizerConfig c = quick(4);
  c.max_ground = 6;
  const OptResult r = maximize(ObjectiveSpec::blowup(Graph::star(2), 1), c);
  EXPECT_TRUE(r.supremum_not_achieved);
  EXPECT_LE(r.value, 0.5 + 1e-9);
}

TEST(Maximize, TriangleBlowupSquared) {
  const OptResult r = maximize(ObjectiveSpec::blowup(Graph::complete(3), 2), quick());
  EXPECT_NEAR(r.value, std::pow(3.0, -6), 1e-12);
  EXPECT_EQ(support_graph(r.best_mass).edge_count(), 3u);
}

TEST(Maximize, GroundBeyondSupportBoundDoesNotHelp) {
  const Graph k4 = Graph::complete(4);
  const std::size_t bound = support_bound(k4, 1).bound;
  OptimizerConfig c = quick(4);
  const OptResult within = maximize(ObjectiveSpec::blowup(k4, 1), c);
  c.min_ground = bound + 1;
  c.max_ground = bound + 3;
  const OptResult beyond = maximize(ObjectiveSpec::blowup(k4, 1), c);
  EXPECT_LE(beyond.value, within.value + 1e-7);
  EXPECT_NEAR(within.value, std::pow(6.0, -6), 1e-12);
}
