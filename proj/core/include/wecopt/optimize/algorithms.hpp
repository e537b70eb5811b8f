#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wecopt/optimize/common.hpp"

namespace wecopt {

/// Nelder-Mead simplex (reflection, expansion, contraction, shrink) from a
/// random initial simplex inside the bounds. Trial vertices are clamped.
RunTrace RunNelderMead(const Objective& objective, const Bounds& bounds,
                       const OptimiserConfig& config);

/// (1+1) EA: every coordinate mutates with probability 1/D by a normal step
/// of std dev sigma_fraction * range; the child replaces the parent unless
/// it is worse.
RunTrace RunOnePlusOneEa(const Objective& objective, const Bounds& bounds,
                         const OptimiserConfig& config);

/// Global-best PSO with inertia damped geometrically each iteration. A
/// coordinate clamped to the box has its velocity zeroed.
RunTrace RunPso(const Objective& objective, const Bounds& bounds,
                const OptimiserConfig& config);

/// CMA-ES (rank-one + rank-mu, cumulative step-size adaptation) in
/// range-normalised coordinates. Out-of-box samples are redrawn up to
/// `resample_attempts` times, then clamped.
RunTrace RunCmaes(const Objective& objective, const Bounds& bounds,
                  const OptimiserConfig& config);

/// DE/rand/1/bin with greedy one-to-one replacement.
RunTrace RunDe(const Objective& objective, const Bounds& bounds,
               const OptimiserConfig& config);

/// Self-adaptive DE over four mutation strategies.
RunTrace RunSade(const Objective& objective, const Bounds& bounds,
                 const OptimiserConfig& config);

/// Binomial crossover: coordinate j comes from the mutant if U(0,1) < cr
/// or j == forced, from the target otherwise.
std::vector<double> BinomialCrossover(std::span<const double> target,
                                      std::span<const double> mutant,
                                      double cr, Rng& rng);

/// SaDE strategy bookkeeping. Success and failure counts of the last
/// `learning_period` generations give each strategy a success rate r_k;
/// once that window is full the selection probabilities become
/// p_k = floor + (1 - K floor) r_k / sum(r).
class StrategyAdaptation {
 public:
  StrategyAdaptation(int strategies, int learning_period, double floor);

  int Sample(Rng& rng) const;
  void Record(int strategy, bool success);
  /// Closes the current generation and refreshes the probabilities.
  void EndGeneration();

  const std::vector<double>& probabilities() const { return probabilities_; }
  int generations() const { return generations_; }

 private:
  int strategies_;
  int learning_period_;
  double floor_;
  int generations_ = 0;
  std::vector<double> probabilities_;
  std::vector<int> current_success_;
  std::vector<int> current_failure_;
  // Per generation, per strategy.
  std::vector<std::vector<int>> success_window_;
  std::vector<std::vector<int>> failure_window_;
};

/// CMA-ES state machine in [0,1]^n coordinates, exposed for testing.
class CmaesEngine {
 public:
  CmaesEngine(std::vector<double> mean, double sigma, int lambda);

  /// Candidate steps y_k ~ N(0, C); x_k = mean + sigma y_k.
  std::vector<std::vector<double>> Ask(Rng& rng);
  /// `points` (possibly repaired) and their values, same order as Ask.
  void Tell(const std::vector<std::vector<double>>& points,
            std::span<const double> values);
  /// Resets to a fresh distribution around `mean`.
  void Restart(std::vector<double> mean);

  bool Degenerate() const;
  double MinEigenvalue() const;
  double sigma() const { return sigma_; }
  const std::vector<double>& mean() const { return mean_; }
  int lambda() const { return lambda_; }

 private:
  void UpdateEigensystem();

  int n_;
  int lambda_;
  int mu_;
  double sigma0_;
  double sigma_;
  std::vector<double> weights_;
  double mu_eff_;
  double c_sigma_, d_sigma_, c_c_, c_1_, c_mu_, chi_n_;
  int generation_ = 0;
  std::vector<double> mean_;
  Eigen::VectorXd p_sigma_, p_c_;
  Eigen::MatrixXd cov_, basis_;
  Eigen::VectorXd scales_;  // sqrt of eigenvalues
};

}  // namespace wecopt
