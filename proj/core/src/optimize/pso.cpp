#include <limits>

#include "internal.hpp"
#include "wecopt/optimize/algorithms.hpp"

namespace wecopt {

RunTrace RunPso(const Objective& objective, const Bounds& bounds,
                const OptimiserConfig& config) {
  OptimiserConfig cfg = config;
  cfg.algorithm = Algorithm::kPso;
  cfg.Validate();
  const Stopwatch clock;
  Rng rng(cfg.seed);
  BudgetedObjective f(objective, cfg.budget);
  const std::size_t n = bounds.size();
  const PsoParams& p = cfg.pso;
  const std::size_t swarm = static_cast<std::size_t>(p.swarm_size);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::vector<double>> x(swarm), v(swarm), best(swarm);
  std::vector<double> best_f(swarm, std::numeric_limits<double>::infinity());
  std::vector<double> global;
  double global_f = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < swarm && !f.Exhausted(); ++i) {
    x[i] = internal::InitialPoint(cfg, i, bounds, rng);
    v[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double vmax = p.initial_velocity_fraction * bounds.width(j);
      v[i][j] = std::uniform_real_distribution<double>(-vmax, vmax)(rng);
    }
    best[i] = x[i];
    best_f[i] = f(x[i]);
    if (global.empty() || best_f[i] < global_f) {
      global = x[i];
      global_f = best_f[i];
    }
  }

  double inertia = p.inertia;
  while (!f.Exhausted()) {
    for (std::size_t i = 0; i < swarm && !f.Exhausted(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        v[i][j] = inertia * v[i][j] +
                  p.cognitive * unit(rng) * (best[i][j] - x[i][j]) +
                  p.social * unit(rng) * (global[j] - x[i][j]);
        double next = x[i][j] + v[i][j];
        if (next < bounds.lower(j) || next > bounds.upper(j)) {
          next = next < bounds.lower(j) ? bounds.lower(j) : bounds.upper(j);
          v[i][j] = 0.0;
        }
        x[i][j] = next;
      }
      const double fx = f(x[i]);
      if (fx < best_f[i]) {
        best[i] = x[i];
        best_f[i] = fx;
        if (fx < global_f) {
          global = x[i];
          global_f = fx;
        }
      }
    }
    inertia *= p.inertia_damping;
  }
  return f.Finish(ToString(Algorithm::kPso), cfg.seed, clock.Seconds());
}

}  // namespace wecopt
