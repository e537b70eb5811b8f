#include <algorithm>

#include "internal.hpp"
#include "wecopt/optimize/algorithms.hpp"

namespace wecopt {

std::vector<double> BinomialCrossover(std::span<const double> target,
                                      std::span<const double> mutant,
                                      double cr, Rng& rng) {
  if (target.size() != mutant.size() || target.empty()) {
    throw ConfigError("crossover: target and mutant must have equal, non-zero size");
  }
  const std::size_t n = target.size();
  const std::size_t forced = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<double> trial(target.begin(), target.end());
  for (std::size_t j = 0; j < n; ++j) {
    if (coin(rng) < cr || j == forced) trial[j] = mutant[j];
  }
  return trial;
}

RunTrace RunDe(const Objective& objective, const Bounds& bounds,
               const OptimiserConfig& config) {
  OptimiserConfig cfg = config;
  cfg.algorithm = Algorithm::kDe;
  cfg.Validate();
  const Stopwatch clock;
  Rng rng(cfg.seed);
  BudgetedObjective f(objective, cfg.budget);
  const std::size_t n = bounds.size();
  const auto np = static_cast<std::size_t>(cfg.de.population);

  std::vector<std::vector<double>> pop;
  std::vector<double> fit;
  for (std::size_t i = 0; i < np && !f.Exhausted(); ++i) {
    pop.push_back(internal::InitialPoint(cfg, i, bounds, rng));
    fit.push_back(f(pop.back()));
  }

  std::uniform_int_distribution<std::size_t> pick(0, np - 1);
  while (!f.Exhausted()) {
    auto next = pop;
    auto next_fit = fit;
    for (std::size_t i = 0; i < np && !f.Exhausted(); ++i) {
      std::size_t r1, r2, r3;
      do r1 = pick(rng); while (r1 == i);
      do r2 = pick(rng); while (r2 == i || r2 == r1);
      do r3 = pick(rng); while (r3 == i || r3 == r1 || r3 == r2);
      std::vector<double> mutant(n);
      for (std::size_t j = 0; j < n; ++j) {
        mutant[j] = pop[r1][j] + cfg.de.weight * (pop[r2][j] - pop[r3][j]);
      }
      std::vector<double> trial = BinomialCrossover(pop[i], mutant, cfg.de.crossover, rng);
      bounds.Clamp(trial);
      const double v = f(trial);
      if (v <= fit[i]) {
        next[i] = std::move(trial);
        next_fit[i] = v;
      }
    }
    pop = std::move(next);
    fit = std::move(next_fit);
  }
  return f.Finish(ToString(Algorithm::kDe), cfg.seed, clock.Seconds());
}

}  // namespace wecopt
