#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace wecopt {

/// Objective over the internal search coordinates; always minimised.
using Objective = std::function<double(std::span<const double>)>;
using Rng = std::mt19937_64;

enum class Algorithm {
  kNelderMead,
  kOnePlusOneEa,
  kPso,
  kCmaes,
  kDe,
  kSade,
  kHybridDeNm,
};

/// Tags: NM, OnePlusOneEA (or 1+1EA), PSO, CMAES, DE, SaDE, HybridDENM.
/// Case-insensitive. Throws ConfigError.
Algorithm ParseAlgorithm(const std::string& tag);
std::string ToString(Algorithm algorithm);
/// The six stand-alone optimisers, in a fixed order.
std::vector<Algorithm> StandardAlgorithms();

/// Axis-aligned box.
class Bounds {
 public:
  /// Throws ConfigError unless lower < upper elementwise and sizes match.
  Bounds(std::vector<double> lower, std::vector<double> upper);

  std::size_t size() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double lower(std::size_t i) const { return lower_[i]; }
  double upper(std::size_t i) const { return upper_[i]; }
  double width(std::size_t i) const { return upper_[i] - lower_[i]; }

  /// Clamps in place; returns true if any coordinate moved.
  bool Clamp(std::span<double> x) const;
  bool Contains(std::span<const double> x) const;
  std::vector<double> Sample(Rng& rng) const;
  /// Sub-box over the given coordinates.
  Bounds Select(std::span<const std::size_t> indices) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

struct NelderMeadParams {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

struct OnePlusOneParams {
  /// Mutation std dev as a fraction of each coordinate's range.
  double sigma_fraction = 0.1;
};

struct PsoParams {
  int swarm_size = 25;
  double cognitive = 1.5;  // c1
  double social = 2.0;     // c2
  double inertia = 1.0;
  double inertia_damping = 0.99;
  /// Initial velocities are uniform in +-fraction * range.
  double initial_velocity_fraction = 0.1;
};

struct CmaesParams {
  int population = 16;
  /// Initial step size as a fraction of each coordinate's range.
  double initial_step_fraction = 0.3;
  int resample_attempts = 10;
};

struct DeParams {
  int population = 25;
  double weight = 0.5;     // F
  double crossover = 0.8;  // CR
};

struct SadeParams {
  int population = 25;
  int learning_period = 50;
  double probability_floor = 0.01;
  double weight_mean = 0.5;
  double weight_sd = 0.3;
  double crossover_init = 0.5;
  double crossover_sd = 0.1;
};

struct HybridParams {
  std::size_t de_budget = 800;
  std::size_t nm_budget = 200;
};

struct OptimiserConfig {
  Algorithm algorithm = Algorithm::kDe;
  std::size_t budget = 5000;
  int repeats = 10;
  std::uint64_t seed = 0;
  /// Optional starting points, used before any random initialisation
  /// (simplex vertices, parent, swarm/population members, CMA-ES mean).
  std::vector<std::vector<double>> initial_points;

  NelderMeadParams nelder_mead;
  OnePlusOneParams one_plus_one;
  PsoParams pso;
  CmaesParams cmaes;
  DeParams de;
  SadeParams sade;
  HybridParams hybrid;

  /// Throws ConfigError for invalid settings of `algorithm`.
  void Validate() const;
};

/// Best-so-far history of one optimisation run.
struct RunTrace {
  std::string algorithm;
  std::uint64_t seed = 0;
  /// Entry i is the best objective after i + 1 evaluations (minimisation).
  std::vector<double> best_so_far;
  std::vector<double> best_x;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  double wall_seconds = 0.0;
};

/// Wraps an objective with an evaluation budget and best-so-far tracking.
/// NaN values count as +inf.
class BudgetedObjective {
 public:
  BudgetedObjective(Objective objective, std::size_t budget);

  /// Must not be called once Exhausted().
  double operator()(std::span<const double> x);

  bool Exhausted() const { return used_ >= budget_; }
  std::size_t used() const { return used_; }
  std::size_t remaining() const { return budget_ - used_; }
  double best_value() const { return best_value_; }
  const std::vector<double>& best_x() const { return best_x_; }
  const std::vector<double>& history() const { return history_; }

  RunTrace Finish(const std::string& algorithm, std::uint64_t seed,
                  double wall_seconds) const;

 private:
  Objective objective_;
  std::size_t budget_;
  std::size_t used_ = 0;
  double best_value_;
  std::vector<double> best_x_;
  std::vector<double> history_;
};

/// Wall-clock stopwatch for RunTrace::wall_seconds.
class Stopwatch {
 public:
  Stopwatch();
  double Seconds() const;

 private:
  std::int64_t start_ns_;
};

/// Runs `config.algorithm` (not the hybrid, which needs fixed geometry).
RunTrace RunOptimiser(const Objective& objective, const Bounds& bounds,
                      const OptimiserConfig& config);

}  // namespace wecopt
