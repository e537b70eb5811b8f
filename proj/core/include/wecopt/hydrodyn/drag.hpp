#pragma once

#include <array>

#include "wecopt/dynamics/geometry.hpp"

namespace wecopt {

/// Axial-flow drag coefficient of a cylinder as a function of H/a:
/// Cd3 = 1.2 - 0.12 (H/a), floored at zero. Throws DomainError for H/a < 0.
double HeaveDragCoefficient(double aspect_ratio);

/// Per-DOF quadratic drag: F_i = -1/2 rho Cd_i Ad_i |v_i| v_i.
struct DragModel {
  std::array<double, 6> cd{};
  /// Reference areas [m^2] for translations, area-moments [m^5] for
  /// rotations.
  std::array<double, 6> areas{};

  /// Throws DomainError on negative or non-finite entries.
  void Validate() const;

  /// 1/2 rho Cd_i Ad_i, the coefficient in front of |v| v.
  double QuadraticCoefficient(int dof, double water_density) const {
    return 0.5 * water_density * cd[dof] * areas[dof];
  }

  static DragModel Zero() { return {}; }
};

/// Drag coefficients and reference areas for a cylinder.
///
///   surge, sway : Cd = 1,   A = 2a H (projected rectangle)
///   heave       : Cd = HeaveDragCoefficient(H/a), A = pi a^2
///   roll, pitch : Cd = 0.2, A = 2a H (H/2)^3 (projected area x arm^3)
///   yaw         : Cd = 0,   A = 2 pi a H a^3 (lateral area x arm^3)
///
/// The rotational entries use the projected-area times cubed moment-arm
/// convention, so that 1/2 rho Cd A |w| w is a moment.
DragModel BuildDragModel(const WecGeometry& geom);

}  // namespace wecopt
