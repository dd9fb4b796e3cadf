#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/mass.hpp"
#include "core/objective.hpp"

namespace planex {

struct OptimizerConfig {
  std::size_t restarts = 64;            // per ground size, including the seed point
  std::size_t max_iterations = 200000;
  double tolerance = 1e-10;             // on max_e mu(e) |g_e / lambda - 1|
  double initial_step = 1.0;
  double max_step = 64.0;
  std::size_t min_ground = 0;           // 0 = objective default
  std::size_t max_ground = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct GroundSizeResult {
  std::size_t ground = 0;
  double value = 0;
  bool converged = false;
};

struct OptResult {
  FloatMass best_mass;
  double value = 0;
  double kkt_residual = 0;
  double lambda = 0;
  std::vector<std::size_t> ground_sizes_swept;
  std::vector<GroundSizeResult> per_ground;
  std::size_t restarts = 0;
  std::size_t iterations = 0;           // for the winning restart
  bool converged = false;
  bool sweep_heuristic = false;         // no proven support bound covers the sweep
  bool supremum_not_achieved = false;   // K_{1,m} or mK_2 at k = 1
};

/// Default ground-size sweep for an objective: the proven support bound
/// when one exists, otherwise a short heuristic range.
std::pair<std::size_t, std::size_t> default_sweep(const ObjectiveSpec& spec, bool& heuristic);

/// Starting point used as restart 0: uniform on E(H), or on E(C_m) for
/// optp (a single pair when m = 2).
FloatMass seed_mass(const ObjectiveSpec& spec, std::size_t ground);

struct AscentResult {
  std::vector<double> weights;
  double value = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Exponentiated-gradient ascent on the simplex from `start`.
AscentResult ascend(const CompiledObjective<double>& objective, std::vector<double> start,
                    const OptimizerConfig& config);

OptResult maximize(const ObjectiveSpec& spec, const OptimizerConfig& config);

}  // namespace planex
