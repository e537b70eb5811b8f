#include "wecopt/optimize/common.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <limits>

#include "wecopt/errors.hpp"
#include "wecopt/optimize/algorithms.hpp"

namespace wecopt {

namespace {

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Algorithm ParseAlgorithm(const std::string& tag) {
  const std::string t = Lower(tag);
  if (t == "nm" || t == "nelder-mead") return Algorithm::kNelderMead;
  if (t == "oneplusoneea" || t == "1+1ea" || t == "ea") {
    return Algorithm::kOnePlusOneEa;
  }
  if (t == "pso") return Algorithm::kPso;
  if (t == "cmaes" || t == "cma-es") return Algorithm::kCmaes;
  if (t == "de") return Algorithm::kDe;
  if (t == "sade") return Algorithm::kSade;
  if (t == "hybriddenm" || t == "de-nm") return Algorithm::kHybridDeNm;
  throw ConfigError("unknown algorithm '" + tag + "'");
}

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kNelderMead: return "NM";
    case Algorithm::kOnePlusOneEa: return "OnePlusOneEA";
    case Algorithm::kPso: return "PSO";
    case Algorithm::kCmaes: return "CMAES";
    case Algorithm::kDe: return "DE";
    case Algorithm::kSade: return "SaDE";
    case Algorithm::kHybridDeNm: return "HybridDENM";
  }
  return "?";
}

std::vector<Algorithm> StandardAlgorithms() {
  return {Algorithm::kNelderMead, Algorithm::kOnePlusOneEa, Algorithm::kPso,
          Algorithm::kCmaes,      Algorithm::kDe,           Algorithm::kSade};
}

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw ConfigError("bounds: lower and upper must be non-empty and equal length");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i]) || !std::isfinite(lower_[i]) ||
        !std::isfinite(upper_[i])) {
      throw ConfigError("bounds: need finite lower < upper at coordinate " +
                        std::to_string(i));
    }
  }
}

bool Bounds::Clamp(std::span<double> x) const {
  bool moved = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double c = std::clamp(x[i], lower_[i], upper_[i]);
    // NaN compares false everywhere; send it to the lower bound.
    const double v = std::isnan(x[i]) ? lower_[i] : c;
    if (v != x[i]) {
      x[i] = v;
      moved = true;
    }
  }
  return moved;
}

bool Bounds::Contains(std::span<const double> x) const {
  if (x.size() != size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
  }
  return true;
}

std::vector<double> Bounds::Sample(Rng& rng) const {
  std::vector<double> x(size());
  for (std::size_t i = 0; i < size(); ++i) {
    x[i] = std::uniform_real_distribution<double>(lower_[i], upper_[i])(rng);
  }
  return x;
}

Bounds Bounds::Select(std::span<const std::size_t> indices) const {
  std::vector<double> lo, hi;
  for (std::size_t i : indices) {
    lo.push_back(lower_.at(i));
    hi.push_back(upper_.at(i));
  }
  return Bounds(std::move(lo), std::move(hi));
}

void OptimiserConfig::Validate() const {
  if (budget == 0) throw ConfigError("budget must be > 0");
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  switch (algorithm) {
    case Algorithm::kNelderMead:
      if (!(nelder_mead.reflection > 0.0 && nelder_mead.expansion > 1.0 &&
            nelder_mead.contraction > 0.0 && nelder_mead.contraction < 1.0 &&
            nelder_mead.shrink > 0.0 && nelder_mead.shrink < 1.0)) {
        throw ConfigError("Nelder-Mead coefficients out of range");
      }
      break;
    case Algorithm::kOnePlusOneEa:
      if (!(one_plus_one.sigma_fraction > 0.0)) {
        throw ConfigError("1+1EA sigma fraction must be > 0");
      }
      break;
    case Algorithm::kPso:
      if (pso.swarm_size < 2) throw ConfigError("PSO swarm size must be >= 2");
      if (!(pso.inertia_damping > 0.0 && pso.inertia_damping <= 1.0)) {
        throw ConfigError("PSO inertia damping must lie in (0, 1]");
      }
      break;
    case Algorithm::kCmaes:
      if (cmaes.population < 2) throw ConfigError("CMA-ES lambda must be >= 2");
      if (!(cmaes.initial_step_fraction > 0.0)) {
        throw ConfigError("CMA-ES initial step must be > 0");
      }
      break;
    case Algorithm::kDe:
      if (de.population < 4) throw ConfigError("DE population must be >= 4");
      if (!(de.weight > 0.0) || !(de.crossover >= 0.0 && de.crossover <= 1.0)) {
        throw ConfigError("DE needs F > 0 and CR in [0, 1]");
      }
      break;
    case Algorithm::kSade:
      if (sade.population < 6) throw ConfigError("SaDE population must be >= 6");
      if (sade.learning_period < 1) {
        throw ConfigError("SaDE learning period must be >= 1");
      }
      if (!(sade.probability_floor >= 0.0 && sade.probability_floor < 0.25)) {
        throw ConfigError("SaDE probability floor must lie in [0, 0.25)");
      }
      break;
    case Algorithm::kHybridDeNm:
      if (hybrid.de_budget == 0) throw ConfigError("hybrid DE budget must be > 0");
      if (de.population < 4) throw ConfigError("DE population must be >= 4");
      break;
  }
}

BudgetedObjective::BudgetedObjective(Objective objective, std::size_t budget)
    : objective_(std::move(objective)),
      budget_(budget),
      best_value_(std::numeric_limits<double>::infinity()) {
  history_.reserve(budget);
}

double BudgetedObjective::operator()(std::span<const double> x) {
  if (Exhausted()) throw ConfigError("evaluation budget exhausted");
  double v = objective_(x);
  if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
  ++used_;
  if (v < best_value_ || best_x_.empty()) {
    best_value_ = std::min(v, best_value_);
    best_x_.assign(x.begin(), x.end());
  }
  history_.push_back(best_value_);
  return v;
}

RunTrace BudgetedObjective::Finish(const std::string& algorithm,
                                   std::uint64_t seed,
                                   double wall_seconds) const {
  RunTrace t;
  t.algorithm = algorithm;
  t.seed = seed;
  t.best_so_far = history_;
  t.best_x = best_x_;
  t.best_value = best_value_;
  t.evaluations = used_;
  t.wall_seconds = wall_seconds;
  return t;
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::Seconds() const {
  const std::int64_t now =
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count();
  return 1e-9 * static_cast<double>(now - start_ns_);
}

RunTrace RunOptimiser(const Objective& objective, const Bounds& bounds,
                      const OptimiserConfig& config) {
  switch (config.algorithm) {
    case Algorithm::kNelderMead: return RunNelderMead(objective, bounds, config);
    case Algorithm::kOnePlusOneEa: return RunOnePlusOneEa(objective, bounds, config);
    case Algorithm::kPso: return RunPso(objective, bounds, config);
    case Algorithm::kCmaes: return RunCmaes(objective, bounds, config);
    case Algorithm::kDe: return RunDe(objective, bounds, config);
    case Algorithm::kSade: return RunSade(objective, bounds, config);
    case Algorithm::kHybridDeNm:
      throw ConfigError("the hybrid DE-NM needs fixed geometry; use RunHybridDeNm");
  }
  throw ConfigError("unknown algorithm");
}

}  // namespace wecopt
