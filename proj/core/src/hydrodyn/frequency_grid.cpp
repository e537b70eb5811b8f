#include "wecopt/hydrodyn/frequency_grid.hpp"

#include <cmath>
#include <string>

#include "wecopt/errors.hpp"

namespace wecopt {

FrequencyGrid::FrequencyGrid(std::vector<double> omegas)
    : omegas_(std::move(omegas)) {
  if (omegas_.size() < 2) {
    throw DomainError("frequency grid needs at least two points");
  }
  for (std::size_t i = 0; i < omegas_.size(); ++i) {
    const double w = omegas_[i];
    if (!std::isfinite(w) || w <= 0.0) {
      throw DomainError("frequency grid entry " + std::to_string(i) +
                        " is not a positive finite value");
    }
    if (i > 0 && w <= omegas_[i - 1]) {
      throw DomainError("frequency grid is not strictly increasing at entry " +
                        std::to_string(i));
    }
  }
}

FrequencyGrid FrequencyGrid::Uniform(double lo, double hi, std::size_t n) {
  if (n < 2 || !(hi > lo)) {
    throw DomainError("uniform grid needs n >= 2 and hi > lo");
  }
  std::vector<double> w(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) w[i] = lo + step * static_cast<double>(i);
  w.back() = hi;
  return FrequencyGrid(std::move(w));
}

FrequencyGrid FrequencyGrid::Default() { return Uniform(0.1, 3.0, 60); }

double Trapezoid(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DomainError("trapezoid: abscissa and ordinate lengths differ");
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  }
  return sum;
}

}  // namespace wecopt
