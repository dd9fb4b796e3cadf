#include "core/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "core/certify.hpp"
#include "core/error.hpp"

namespace planex {
namespace {

constexpr double kPolishThreshold = 1e-12;

void normalize(std::vector<double>& w) {
  double total = 0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
}

// Exact renormalization can leave the sum a few ulps from 1; fold the
// remainder into the largest weight so EdgeMass accepts it.
FloatMass make_mass(std::size_t ground, std::vector<double> w) {
  normalize(w);
  double total = 0;
  for (double x : w) total += x;
  *std::max_element(w.begin(), w.end()) += 1.0 - total;
  return FloatMass(ground, std::move(w));
}

std::vector<double> dirichlet_point(std::size_t dimension, std::uint64_t seed, std::size_t ground,
                                    std::size_t restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(ground), static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> w(dimension);
  for (double& x : w) x = draw(rng);
  normalize(w);
  return w;
}

double residual_on_face(const std::vector<double>& w, const std::vector<double>& g, double lambda) {
  double worst = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0) worst = std::max(worst, w[i] * std::abs(g[i] / lambda - 1));
  return worst;
}

bool is_star_or_matching(const Graph& h) {
  const std::size_t n = h.vertex_count();
  const bool star = n >= 3 && h.edge_count() == n - 1 && h.max_degree() == n - 1 && h.min_degree() == 1;
  const bool matching = h.edge_count() >= 2 && h.max_degree() == 1 && h.min_degree() == 1;
  return star || matching;
}

AscentResult local_search(const CompiledObjective<double>& objective, std::vector<double> start,
                          const OptimizerConfig& config) {
  AscentResult best = ascend(objective, std::move(start), config);
  // Snap vanishing weights to zero, re-ascend on the face, and release any
  // zeroed pair whose gradient says it should carry mass.
  for (int round = 0; round < 3 && best.value > 0; ++round) {
    std::vector<double> w = best.weights;
    const double top = *std::max_element(w.begin(), w.end());
    for (double& x : w)
      if (x < kPolishThreshold * top) x = 0;
    normalize(w);
    AscentResult polished = ascend(objective, w, config);
    if (polished.value < best.value * (1 - 1e-12)) break;
    polished.iterations += best.iterations;
    best = std::move(polished);

    std::vector<double> g;
    const double f = objective.value_and_gradient(best.weights, g);
    const double lambda = static_cast<double>(objective.spec().degree()) * f;
    w = best.weights;
    bool released = false;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (w[i] == 0 && g[i] > lambda * (1 + 1e-9)) {
        w[i] = 1e-6;
        released = true;
      }
    if (!released) break;
    normalize(w);
    AscentResult moved = ascend(objective, w, config);
    if (moved.value <= best.value) break;
    moved.iterations += best.iterations;
    best = std::move(moved);
  }
  return best;
}

}  // namespace

std::pair<std::size_t, std::size_t> default_sweep(const ObjectiveSpec& spec, bool& heuristic) {
  if (spec.kind == ObjectiveSpec::Kind::Path) {
    heuristic = true;
    return {spec.m, spec.m + 3};
  }
  const Graph& h = spec.pattern;
  const std::size_t lo = h.vertex_count();
  if (spec.k * h.min_degree() >= 2) {
    heuristic = false;
    return {lo, std::max(lo, support_bound(h, spec.k).bound)};
  }
  heuristic = true;
  return {lo, lo + 3};
}

FloatMass seed_mass(const ObjectiveSpec& spec, std::size_t ground) {
  require(ground >= spec.min_ground(), ErrorKind::InvalidArgument, "seed: ground set too small");
  if (spec.kind == ObjectiveSpec::Kind::Blowup) return FloatMass::uniform_on(spec.pattern, ground);
  if (spec.m == 2) return FloatMass::uniform_on(Graph::path(2), ground);
  return FloatMass::uniform_on(Graph::cycle(spec.m), ground);
}

AscentResult ascend(const CompiledObjective<double>& objective, std::vector<double> start,
                    const OptimizerConfig& config) {
  const double degree = static_cast<double>(objective.spec().degree());
  AscentResult out;
  out.weights = std::move(start);
  std::vector<double> g, trial_g, trial(out.weights.size()), exponent(out.weights.size());
  out.value = objective.value_and_gradient(out.weights, g);
  if (!(out.value > 0)) return out;

  double step = config.initial_step;
  double checkpoint = out.value;
  std::size_t checkpoint_iteration = 0;
  for (; out.iterations < config.max_iterations; ++out.iterations) {
    const double lambda = degree * out.value;
    if (residual_on_face(out.weights, g, lambda) < config.tolerance) {
      out.converged = true;
      break;
    }
    if (out.iterations - checkpoint_iteration >= 5000) {
      if (out.value <= checkpoint * (1 + 1e-14)) break;
      checkpoint = out.value;
      checkpoint_iteration = out.iterations;
    }

    // Multiplicative update w_e <- w_e exp(step (g_e / lambda - 1)), in log
    // space so that large steps cannot overflow.
    bool accepted = false;
    while (!accepted) {
      double top = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < trial.size(); ++i) {
        exponent[i] = out.weights[i] > 0 ? std::log(out.weights[i]) + step * (g[i] / lambda - 1)
                                         : -std::numeric_limits<double>::infinity();
        top = std::max(top, exponent[i]);
      }
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = std::exp(exponent[i] - top);
      normalize(trial);
      const double value = objective.value_and_gradient(trial, trial_g);
      if (value >= out.value * (1 - 1e-15)) {
        accepted = true;
        out.weights.swap(trial);
        g.swap(trial_g);
        out.value = value;
        step = std::min(step * 1.25, config.max_step);
      } else {
        step *= 0.5;
        if (step < 1e-12) return out;
      }
    }
  }
  return out;
}

OptResult maximize(const ObjectiveSpec& spec, const OptimizerConfig& config) {
  require(config.tolerance > 0, ErrorKind::InvalidArgument, "optimizer tolerance must be positive");
  require(config.restarts >= 1, ErrorKind::InvalidArgument, "optimizer needs at least one restart");

  OptResult result;
  auto [lo, hi] = default_sweep(spec, result.sweep_heuristic);
  if (config.min_ground) lo = config.min_ground;
  if (config.max_ground) hi = config.max_ground;
  lo = std::max(lo, spec.min_ground());
  require(lo <= hi, ErrorKind::InvalidArgument,
          "empty ground-size range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  if (spec.kind == ObjectiveSpec::Kind::Blowup && spec.k * spec.pattern.min_degree() >= 2)
    result.sweep_heuristic = hi < support_bound(spec.pattern, spec.k).bound;
  result.restarts = config.restarts;
  result.supremum_not_achieved =
      spec.kind == ObjectiveSpec::Kind::Blowup && spec.k == 1 && is_star_or_matching(spec.pattern);

  std::optional<AscentResult> best;
  std::size_t best_ground = 0;
  for (std::size_t ground = lo; ground <= hi; ++ground) {
    result.ground_sizes_swept.push_back(ground);
    const CompiledObjective<double> objective(spec, ground);
    std::vector<AscentResult> runs(config.restarts);
    auto run = [&](std::size_t r) {
      std::vector<double> start = r == 0 ? seed_mass(spec, ground).weights()
                                         : dirichlet_point(objective.dimension(), config.seed, ground, r);
      runs[r] = local_search(objective, std::move(start), config);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.restarts)));
    if (threads == 1) {
      for (std::size_t r = 0; r < config.restarts; ++r) run(r);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t r = t; r < config.restarts; r += threads) run(r);
        });
      for (auto& th : pool) th.join();
    }

    // Ordered reduction: the earliest restart wins ties.
    std::size_t winner = 0;
    for (std::size_t r = 1; r < runs.size(); ++r)
      if (runs[r].value > runs[winner].value) winner = r;
    result.per_ground.push_back({ground, runs[winner].value, runs[winner].converged});
    if (!best || runs[winner].value > best->value * (1 + 1e-12)) {
      best = std::move(runs[winner]);
      best_ground = ground;
    }
  }

  result.best_mass = make_mass(best_ground, best->weights);
  result.iterations = best->iterations;
  result.converged = best->converged;
  result.value = spec.kind == ObjectiveSpec::Kind::Path
                     ? eval_optp(result.best_mass, spec.m)
                     : eval_optb(result.best_mass, spec.pattern, spec.k);
  const KktReport<double> kkt = kkt_residual(result.best_mass, spec);
  result.kkt_residual = kkt.residual;
  result.lambda = kkt.lambda;
  return result;
}

}  // namespace planex
