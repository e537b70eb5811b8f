#include "wecopt/dynamics/geometry.hpp"

#include <cmath>
#include <numbers>

#include "wecopt/errors.hpp"

namespace wecopt {

void WecGeometry::Validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(radius)) throw GeometryError("buoy radius must be > 0");
  if (!positive(height)) throw GeometryError("buoy height must be > 0");
  if (!positive(submergence)) {
    throw GeometryError("buoy pierces the free surface (submergence <= 0)");
  }
  if (!positive(water_depth)) throw GeometryError("water depth must be > 0");
  if (!(submergence + height < water_depth)) {
    throw GeometryError("buoy reaches the seabed (d + H >= h)");
  }
  if (!positive(water_density) || !positive(gravity)) {
    throw GeometryError("water density and gravity must be > 0");
  }
  if (!(tether_inclination_deg >= 0.0 && tether_inclination_deg < 90.0)) {
    throw GeometryError("tether inclination must lie in [0, 90) deg");
  }
  if (!(attachment_angle_deg > 0.0 && attachment_angle_deg < 90.0)) {
    throw GeometryError("attachment direction must lie in (0, 90) deg");
  }
}

double WecGeometry::Volume() const {
  return std::numbers::pi * radius * radius * height;
}

double WecGeometry::BuoyMass() const { return 0.5 * water_density * Volume(); }

}  // namespace wecopt
