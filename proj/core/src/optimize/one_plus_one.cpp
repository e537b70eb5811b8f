#include "internal.hpp"
#include "wecopt/optimize/algorithms.hpp"

namespace wecopt {

RunTrace RunOnePlusOneEa(const Objective& objective, const Bounds& bounds,
                         const OptimiserConfig& config) {
  OptimiserConfig cfg = config;
  cfg.algorithm = Algorithm::kOnePlusOneEa;
  cfg.Validate();
  const Stopwatch clock;
  Rng rng(cfg.seed);
  BudgetedObjective f(objective, cfg.budget);
  const std::size_t n = bounds.size();
  const double rate = 1.0 / static_cast<double>(n);

  std::vector<double> parent = internal::InitialPoint(cfg, 0, bounds, rng);
  double parent_f = f(parent);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);

  while (!f.Exhausted()) {
    std::vector<double> child = parent;
    for (std::size_t j = 0; j < n; ++j) {
      if (coin(rng) < rate) {
        child[j] += cfg.one_plus_one.sigma_fraction * bounds.width(j) * normal(rng);
      }
    }
    bounds.Clamp(child);
    const double child_f = f(child);
    if (child_f <= parent_f) {
      parent = std::move(child);
      parent_f = child_f;
    }
  }
  return f.Finish(ToString(Algorithm::kOnePlusOneEa), cfg.seed, clock.Seconds());
}

}  // namespace wecopt
