#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wecopt {

/// Strictly increasing, strictly positive angular frequencies [rad/s].
class FrequencyGrid {
 public:
  /// Throws DomainError unless the values are > 0, strictly increasing and
  /// at least two long.
  explicit FrequencyGrid(std::vector<double> omegas);

  /// `n` points evenly spaced on [lo, hi].
  static FrequencyGrid Uniform(double lo, double hi, std::size_t n);

  /// 60 points on [0.1, 3.0] rad/s.
  static FrequencyGrid Default();

  std::span<const double> omegas() const { return omegas_; }
  std::size_t size() const { return omegas_.size(); }
  double operator[](std::size_t i) const { return omegas_[i]; }
  double front() const { return omegas_.front(); }
  double back() const { return omegas_.back(); }

  bool operator==(const FrequencyGrid&) const = default;

 private:
  std::vector<double> omegas_;
};

/// Trapezoid rule for samples `y` over abscissae `x` (same length).
double Trapezoid(std::span<const double> x, std::span<const double> y);

}  // namespace wecopt
