#include <algorithm>
#include <deque>
#include <numeric>

#include "internal.hpp"
#include "wecopt/optimize/algorithms.hpp"

namespace wecopt {

StrategyAdaptation::StrategyAdaptation(int strategies, int learning_period,
                                       double floor)
    : strategies_(strategies),
      learning_period_(learning_period),
      floor_(floor),
      probabilities_(static_cast<std::size_t>(std::max(strategies, 1)),
                     1.0 / std::max(strategies, 1)),
      current_success_(probabilities_.size(), 0),
      current_failure_(probabilities_.size(), 0) {
  if (strategies < 1 || learning_period < 1 || floor < 0.0 ||
      floor * strategies >= 1.0) {
    throw ConfigError("strategy adaptation: invalid settings");
  }
}

int StrategyAdaptation::Sample(Rng& rng) const {
  std::discrete_distribution<int> dist(probabilities_.begin(), probabilities_.end());
  return dist(rng);
}

void StrategyAdaptation::Record(int strategy, bool success) {
  if (strategy < 0 || strategy >= strategies_) {
    throw ConfigError("strategy adaptation: unknown strategy");
  }
  ++(success ? current_success_ : current_failure_)[strategy];
}

void StrategyAdaptation::EndGeneration() {
  success_window_.push_back(current_success_);
  failure_window_.push_back(current_failure_);
  if (static_cast<int>(success_window_.size()) > learning_period_) {
    success_window_.erase(success_window_.begin());
    failure_window_.erase(failure_window_.begin());
  }
  std::fill(current_success_.begin(), current_success_.end(), 0);
  std::fill(current_failure_.begin(), current_failure_.end(), 0);
  ++generations_;
  if (generations_ < learning_period_) return;

  std::vector<double> rate(strategies_, 0.0);
  for (int k = 0; k < strategies_; ++k) {
    double s = 0.0, total = 0.0;
    for (std::size_t g = 0; g < success_window_.size(); ++g) {
      s += success_window_[g][k];
      total += success_window_[g][k] + failure_window_[g][k];
    }
    rate[k] = total > 0.0 ? s / total : 0.0;
  }
  const double sum = std::accumulate(rate.begin(), rate.end(), 0.0);
  for (int k = 0; k < strategies_; ++k) {
    probabilities_[k] = sum > 0.0
                            ? floor_ + (1.0 - strategies_ * floor_) * rate[k] / sum
                            : 1.0 / strategies_;
  }
}

namespace {

enum Strategy { kRand1Bin, kRandToBest2Bin, kRand2Bin, kCurrentToRand1, kStrategies };

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

RunTrace RunSade(const Objective& objective, const Bounds& bounds,
                 const OptimiserConfig& config) {
  OptimiserConfig cfg = config;
  cfg.algorithm = Algorithm::kSade;
  cfg.Validate();
  const Stopwatch clock;
  Rng rng(cfg.seed);
  BudgetedObjective f(objective, cfg.budget);
  const SadeParams& p = cfg.sade;
  const std::size_t n = bounds.size();
  const auto np = static_cast<std::size_t>(p.population);

  std::vector<std::vector<double>> pop;
  std::vector<double> fit;
  for (std::size_t i = 0; i < np && !f.Exhausted(); ++i) {
    pop.push_back(internal::InitialPoint(cfg, i, bounds, rng));
    fit.push_back(f(pop.back()));
  }

  StrategyAdaptation adapt(kStrategies, p.learning_period, p.probability_floor);
  std::vector<double> cr_mean(kStrategies, p.crossover_init);
  // Successful CR values per strategy, one entry per generation in the window.
  std::vector<std::deque<std::vector<double>>> cr_memory(kStrategies);

  std::normal_distribution<double> f_dist(p.weight_mean, p.weight_sd);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, np - 1);

  while (!f.Exhausted()) {
    std::size_t best = std::min_element(fit.begin(), fit.end()) - fit.begin();
    std::vector<std::vector<double>> generation_cr(kStrategies);
    auto next = pop;
    auto next_fit = fit;

    for (std::size_t i = 0; i < np && !f.Exhausted(); ++i) {
      const int s = adapt.Sample(rng);
      double weight;
      do weight = f_dist(rng); while (!(weight > 0.0 && weight <= 1.0));
      const double cr = std::clamp(
          std::normal_distribution<double>(cr_mean[s], p.crossover_sd)(rng), 0.0, 1.0);

      std::size_t r[5];
      for (int m = 0; m < 5; ++m) {
        bool clash;
        do {
          r[m] = pick(rng);
          clash = r[m] == i;
          for (int q = 0; q < m; ++q) clash = clash || r[m] == r[q];
        } while (clash);
      }
      const auto& xi = pop[i];
      std::vector<double> trial(n);
      switch (s) {
        case kRand1Bin:
        case kRandToBest2Bin:
        case kRand2Bin: {
          std::vector<double> mutant(n);
          for (std::size_t j = 0; j < n; ++j) {
            const auto& a = pop[r[0]];
            const auto& b = pop[r[1]];
            const auto& c = pop[r[2]];
            const auto& d = pop[r[3]];
            if (s == kRand1Bin) {
              mutant[j] = a[j] + weight * (b[j] - c[j]);
            } else if (s == kRandToBest2Bin) {
              mutant[j] = xi[j] + weight * (pop[best][j] - xi[j]) +
                          weight * (a[j] - b[j]) + weight * (c[j] - d[j]);
            } else {
              mutant[j] = a[j] + weight * (b[j] - c[j]) +
                          weight * (d[j] - pop[r[4]][j]);
            }
          }
          trial = BinomialCrossover(xi, mutant, cr, rng);
          break;
        }
        case kCurrentToRand1: {
          const double k = unit(rng);
          for (std::size_t j = 0; j < n; ++j) {
            trial[j] = xi[j] + k * (pop[r[0]][j] - xi[j]) +
                       weight * (pop[r[1]][j] - pop[r[2]][j]);
          }
          break;
        }
      }
      bounds.Clamp(trial);
      const double v = f(trial);
      const bool success = v <= fit[i];
      adapt.Record(s, success);
      if (success) {
        generation_cr[s].push_back(cr);
        next[i] = std::move(trial);
        next_fit[i] = v;
      }
    }
    pop = std::move(next);
    fit = std::move(next_fit);

    adapt.EndGeneration();
    for (int s = 0; s < kStrategies; ++s) {
      cr_memory[s].push_back(std::move(generation_cr[s]));
      if (static_cast<int>(cr_memory[s].size()) > p.learning_period) {
        cr_memory[s].pop_front();
      }
      if (adapt.generations() >= p.learning_period) {
        std::vector<double> all;
        for (const auto& g : cr_memory[s]) all.insert(all.end(), g.begin(), g.end());
        if (!all.empty()) cr_mean[s] = Median(std::move(all));
      }
    }
  }
  return f.Finish(ToString(Algorithm::kSade), cfg.seed, clock.Seconds());
}

}  // namespace wecopt
