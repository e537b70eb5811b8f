#include <algorithm>
#include <cmath>
#include <numeric>

#include "internal.hpp"
#include "wecopt/optimize/algorithms.hpp"

namespace wecopt {

CmaesEngine::CmaesEngine(std::vector<double> mean, double sigma, int lambda)
    : n_(static_cast<int>(mean.size())),
      lambda_(lambda),
      mu_(lambda / 2),
      sigma0_(sigma),
      sigma_(sigma),
      mean_(std::move(mean)) {
  if (n_ < 1 || lambda_ < 2 || !(sigma > 0.0)) {
    throw ConfigError("CMA-ES needs n >= 1, lambda >= 2, sigma > 0");
  }
  const double n = n_;
  weights_.resize(mu_);
  for (int i = 0; i < mu_; ++i) {
    weights_[i] = std::log(mu_ + 0.5) - std::log(i + 1.0);
  }
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  double sum_sq = 0.0;
  for (double& w : weights_) {
    w /= sum;
    sum_sq += w * w;
  }
  mu_eff_ = 1.0 / sum_sq;

  c_sigma_ = (mu_eff_ + 2.0) / (n + mu_eff_ + 5.0);
  d_sigma_ = 1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff_ - 1.0) / (n + 1.0)) - 1.0) +
             c_sigma_;
  c_c_ = (4.0 + mu_eff_ / n) / (n + 4.0 + 2.0 * mu_eff_ / n);
  c_1_ = 2.0 / ((n + 1.3) * (n + 1.3) + mu_eff_);
  c_mu_ = std::min(1.0 - c_1_, 2.0 * (mu_eff_ - 2.0 + 1.0 / mu_eff_) /
                                   ((n + 2.0) * (n + 2.0) + mu_eff_));
  chi_n_ = std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));
  Restart(mean_);
}

void CmaesEngine::Restart(std::vector<double> mean) {
  mean_ = std::move(mean);
  sigma_ = sigma0_;
  generation_ = 0;
  p_sigma_ = Eigen::VectorXd::Zero(n_);
  p_c_ = Eigen::VectorXd::Zero(n_);
  cov_ = Eigen::MatrixXd::Identity(n_, n_);
  basis_ = Eigen::MatrixXd::Identity(n_, n_);
  scales_ = Eigen::VectorXd::Ones(n_);
}

std::vector<std::vector<double>> CmaesEngine::Ask(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> out(lambda_, std::vector<double>(n_));
  for (auto& x : out) {
    Eigen::VectorXd z(n_);
    for (int j = 0; j < n_; ++j) z(j) = normal(rng);
    const Eigen::VectorXd y = basis_ * scales_.cwiseProduct(z);
    for (int j = 0; j < n_; ++j) x[j] = mean_[j] + sigma_ * y(j);
  }
  return out;
}

void CmaesEngine::Tell(const std::vector<std::vector<double>>& points,
                       std::span<const double> values) {
  if (static_cast<int>(points.size()) != lambda_ ||
      static_cast<int>(values.size()) != lambda_) {
    throw ConfigError("CMA-ES tell: expected lambda points and values");
  }
  std::vector<int> order(lambda_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values[a] < values[b]; });

  const Eigen::Map<const Eigen::VectorXd> old_mean(mean_.data(), n_);
  const Eigen::VectorXd m_old = old_mean;
  Eigen::MatrixXd steps(n_, mu_);
  Eigen::VectorXd m_new = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < mu_; ++i) {
    const Eigen::Map<const Eigen::VectorXd> x(points[order[i]].data(), n_);
    m_new += weights_[i] * x;
    steps.col(i) = (x - m_old) / sigma_;
  }
  const Eigen::VectorXd y_w = (m_new - m_old) / sigma_;

  const Eigen::MatrixXd inv_sqrt =
      basis_ * scales_.cwiseInverse().asDiagonal() * basis_.transpose();
  p_sigma_ = (1.0 - c_sigma_) * p_sigma_ +
             std::sqrt(c_sigma_ * (2.0 - c_sigma_) * mu_eff_) * (inv_sqrt * y_w);
  const double ps_norm = p_sigma_.norm();
  const double correction =
      std::sqrt(1.0 - std::pow(1.0 - c_sigma_, 2.0 * (generation_ + 1)));
  const bool h_sigma =
      ps_norm / correction < (1.4 + 2.0 / (n_ + 1.0)) * chi_n_;
  p_c_ = (1.0 - c_c_) * p_c_ +
         (h_sigma ? std::sqrt(c_c_ * (2.0 - c_c_) * mu_eff_) : 0.0) * y_w;

  Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < mu_; ++i) {
    rank_mu += weights_[i] * steps.col(i) * steps.col(i).transpose();
  }
  const double delta_h = h_sigma ? 0.0 : c_c_ * (2.0 - c_c_);
  cov_ = (1.0 - c_1_ - c_mu_) * cov_ +
         c_1_ * (p_c_ * p_c_.transpose() + delta_h * cov_) + c_mu_ * rank_mu;
  sigma_ *= std::exp(c_sigma_ / d_sigma_ * (ps_norm / chi_n_ - 1.0));

  for (int j = 0; j < n_; ++j) mean_[j] = m_new(j);
  ++generation_;
  UpdateEigensystem();
}

void CmaesEngine::UpdateEigensystem() {
  cov_ = 0.5 * (cov_ + cov_.transpose());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov_);
  if (eig.info() != Eigen::Success) {
    scales_ = Eigen::VectorXd::Constant(n_, std::nan(""));
    return;
  }
  basis_ = eig.eigenvectors();
  scales_ = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
}

double CmaesEngine::MinEigenvalue() const {
  return scales_.allFinite() ? scales_.minCoeff() * scales_.minCoeff()
                             : std::nan("");
}

bool CmaesEngine::Degenerate() const {
  if (!scales_.allFinite() || !std::isfinite(sigma_)) return true;
  const double lo = scales_.minCoeff();
  const double hi = scales_.maxCoeff();
  if (!(lo > 0.0) || hi / lo > 1e7) return true;
  const double step = sigma_ * hi;
  return step < 1e-15 || step > 1e3;
}

RunTrace RunCmaes(const Objective& objective, const Bounds& bounds,
                  const OptimiserConfig& config) {
  OptimiserConfig cfg = config;
  cfg.algorithm = Algorithm::kCmaes;
  cfg.Validate();
  const Stopwatch clock;
  Rng rng(cfg.seed);
  const std::size_t n = bounds.size();

  // Work in [0,1]^n so one step size fits every coordinate.
  auto to_real = [&](std::span<const double> y) {
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = bounds.lower(j) + y[j] * bounds.width(j);
    return x;
  };
  BudgetedObjective f(
      [&](std::span<const double> y) { return objective(to_real(y)); },
      cfg.budget);
  const Bounds unit(std::vector<double>(n, 0.0), std::vector<double>(n, 1.0));

  std::vector<double> mean(n, 0.5);
  if (!cfg.initial_points.empty()) {
    const auto& x0 = cfg.initial_points.front();
    if (x0.size() != n) throw ConfigError("initial point has the wrong dimension");
    for (std::size_t j = 0; j < n; ++j) {
      mean[j] = std::clamp((x0[j] - bounds.lower(j)) / bounds.width(j), 0.0, 1.0);
    }
  }
  CmaesEngine engine(mean, cfg.cmaes.initial_step_fraction, cfg.cmaes.population);

  while (!f.Exhausted()) {
    auto points = engine.Ask(rng);
    for (auto& y : points) {
      for (int attempt = 1;
           attempt < cfg.cmaes.resample_attempts && !unit.Contains(y); ++attempt) {
        y = engine.Ask(rng).front();
      }
      unit.Clamp(y);
    }
    std::vector<double> values;
    for (const auto& y : points) {
      if (f.Exhausted()) break;
      values.push_back(f(y));
    }
    if (values.size() < points.size()) break;
    engine.Tell(points, values);
    if (engine.Degenerate()) engine.Restart(f.best_x());
  }

  RunTrace trace = f.Finish(ToString(Algorithm::kCmaes), cfg.seed, clock.Seconds());
  trace.best_x = to_real(trace.best_x);
  return trace;
}

}  // namespace wecopt
