#include "wecopt/hydrodyn/hydro_coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wecopt/errors.hpp"

namespace wecopt {
namespace {

bool SymmetricWithin(const Matrix6d& m, double tol) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

}  // namespace

void HydroCoefficients::Validate(double symmetry_tol) const {
  const std::size_t n = grid.size();
  if (added_mass.size() != n || radiation_damping.size() != n ||
      excitation.size() != n) {
    throw DomainError("hydro coefficients: array lengths do not match grid");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = " at omega = " + std::to_string(grid[i]);
    if (!added_mass[i].allFinite() || !radiation_damping[i].allFinite() ||
        !excitation[i].allFinite()) {
      throw DomainError("hydro coefficients: non-finite entry" + at);
    }
    if (!SymmetricWithin(added_mass[i], symmetry_tol)) {
      throw DomainError("hydro coefficients: added mass not symmetric" + at);
    }
    if (!SymmetricWithin(radiation_damping[i], symmetry_tol)) {
      throw DomainError("hydro coefficients: radiation damping not symmetric" +
                        at);
    }
    if ((radiation_damping[i].diagonal().array() < 0.0).any()) {
      throw DomainError("hydro coefficients: negative radiation damping" + at);
    }
  }
}

HydroCoefficients::Sample HydroCoefficients::At(double omega) const {
  const auto w = grid.omegas();
  if (omega <= w.front()) {
    return {added_mass.front(), radiation_damping.front(), excitation.front()};
  }
  if (omega >= w.back()) {
    return {added_mass.back(), radiation_damping.back(), excitation.back()};
  }
  const auto hi_it = std::upper_bound(w.begin(), w.end(), omega);
  const std::size_t hi = static_cast<std::size_t>(hi_it - w.begin());
  const std::size_t lo = hi - 1;
  const double t = (omega - w[lo]) / (w[hi] - w[lo]);
  return {(1.0 - t) * added_mass[lo] + t * added_mass[hi],
          (1.0 - t) * radiation_damping[lo] + t * radiation_damping[hi],
          (1.0 - t) * excitation[lo] + t * excitation[hi]};
}

HydroCoefficients HydroCoefficients::Resample(
    const FrequencyGrid& target) const {
  HydroCoefficients out{target, {}, {}, {}};
  out.added_mass.reserve(target.size());
  out.radiation_damping.reserve(target.size());
  out.excitation.reserve(target.size());
  for (double w : target.omegas()) {
    Sample s = At(w);
    out.added_mass.push_back(s.added_mass);
    out.radiation_damping.push_back(s.radiation_damping);
    out.excitation.push_back(s.excitation);
  }
  return out;
}

}  // namespace wecopt
