#pragma once

#include "wecopt/dynamics/geometry.hpp"
#include "wecopt/dynamics/kinematics.hpp"
#include "wecopt/dynamics/spectral_solver.hpp"

namespace wecopt {

/// Multiplier on the tension std dev for the 99% statistical peak.
inline constexpr double kPeakFactor = 2.57;

struct TetherForceStats {
  double pretension = 0.0;  // T0 [N]
  double sigma_ft = 0.0;    // largest per-tether tension std dev [N]
  double peak_force = 0.0;  // T0 + 2.57 sigma_ft [N]
};

/// Static tension: the net buoyancy 0.5 rho g V shared by three tethers
/// inclined at alpha_t, T0 = 0.5 rho g V / (3 cos alpha_t).
double Pretension(const WecGeometry& geom);

/// Per tether, sigma_Ft^2 = k^2 sigma_q^2 + b^2 sigma_qdot^2 (excursion and
/// rate are uncorrelated at equal times); the largest tether is reported.
TetherForceStats ComputeTetherForceStats(const WecGeometry& geom,
                                         const SpectralResponse& response,
                                         const PtoSetting& pto);

}  // namespace wecopt
