#pragma once

#include <array>

#include "wecopt/dynamics/geometry.hpp"
#include "wecopt/linalg.hpp"

namespace wecopt {

/// Tether k (k = 0, 1, 2) lies in the vertical plane at azimuth 120 k deg.
///
/// Attachment points: from the centroid, along a ray tilted by the
/// attachment angle away from the downward body axis, to where it meets the
/// hull (bottom cap or side wall). Tethers lean outward: the unit vector
/// from anchor to attachment point is tilted by the tether inclination from
/// the vertical, so the anchors sit radially outside the attachment points
/// on the seabed.
struct TetherLayout {
  std::array<Vector3d, 3> attachment;  // body frame, relative to centroid
  std::array<Vector3d, 3> direction;   // unit, anchor -> attachment
  std::array<Vector3d, 3> anchor;      // world frame
};

TetherLayout ComputeTetherLayout(const WecGeometry& geom);

/// Tether length rates from body velocity at the nominal pose,
/// qdot = J^-1 xdot. Row k is [u_k^T, (r_k x u_k)^T]; a positive rate
/// lengthens the tether.
Matrix36d InverseJacobian(const WecGeometry& geom);

/// Rigid-body mass matrix of a uniform solid cylinder with the buoy mass
/// 0.5 rho V: diag(m, m, m, m(3a^2+H^2)/12, m(3a^2+H^2)/12, m a^2/2).
Matrix6d MassMatrix(const WecGeometry& geom);

/// Per-tether PTO spring and damper, identical on all three tethers.
struct PtoSetting {
  double stiffness = 0.0;  // [N/m]
  double damping = 0.0;    // [N s/m]
};

struct PtoMatrices {
  Matrix6d stiffness;
  Matrix6d damping;
};

/// Generalised PTO matrices K = J^-T diag(k) J^-1, B likewise.
PtoMatrices PtoMatrices6Dof(const PtoSetting& pto, const Matrix36d& jinv);

}  // namespace wecopt
