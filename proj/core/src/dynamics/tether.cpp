#include "wecopt/dynamics/tether.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wecopt {

double Pretension(const WecGeometry& geom) {
  geom.Validate();
  const double tilt = geom.tether_inclination_deg * std::numbers::pi / 180.0;
  const double net_buoyancy =
      0.5 * geom.water_density * geom.gravity * geom.Volume();
  return net_buoyancy / (3.0 * std::cos(tilt));
}

TetherForceStats ComputeTetherForceStats(const WecGeometry& geom,
                                         const SpectralResponse& response,
                                         const PtoSetting& pto) {
  TetherForceStats stats;
  stats.pretension = Pretension(geom);
  for (int k = 0; k < 3; ++k) {
    const double spring = pto.stiffness * response.sigma_q[k];
    const double damper = pto.damping * response.sigma_qdot[k];
    stats.sigma_ft = std::max(stats.sigma_ft, std::hypot(spring, damper));
  }
  stats.peak_force = stats.pretension + kPeakFactor * stats.sigma_ft;
  return stats;
}

}  // namespace wecopt
