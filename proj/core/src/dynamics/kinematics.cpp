#include "wecopt/dynamics/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wecopt {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

}  // namespace

TetherLayout ComputeTetherLayout(const WecGeometry& geom) {
  geom.Validate();
  const double ap = geom.attachment_angle_deg * kDeg;
  const double tilt = geom.tether_inclination_deg * kDeg;
  // Distance from the centroid to the hull along the attachment ray: the
  // nearer of the side wall and the bottom cap.
  const double reach = std::min(geom.radius / std::sin(ap),
                                0.5 * geom.height / std::cos(ap));
  const Vector3d centroid(0.0, 0.0, geom.CentroidZ());

  TetherLayout layout;
  for (int k = 0; k < 3; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 3.0;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    layout.attachment[k] =
        reach * Vector3d(std::sin(ap) * c, std::sin(ap) * s, -std::cos(ap));
    layout.direction[k] =
        Vector3d(-std::sin(tilt) * c, -std::sin(tilt) * s, std::cos(tilt));
    const Vector3d world = centroid + layout.attachment[k];
    const double length = (world.z() + geom.water_depth) / std::cos(tilt);
    layout.anchor[k] = world - length * layout.direction[k];
  }
  return layout;
}

Matrix36d InverseJacobian(const WecGeometry& geom) {
  const TetherLayout layout = ComputeTetherLayout(geom);
  Matrix36d jinv;
  for (int k = 0; k < 3; ++k) {
    const Vector3d& u = layout.direction[k];
    jinv.block<1, 3>(k, 0) = u.transpose();
    jinv.block<1, 3>(k, 3) = layout.attachment[k].cross(u).transpose();
  }
  return jinv;
}

Matrix6d MassMatrix(const WecGeometry& geom) {
  geom.Validate();
  const double m = geom.BuoyMass();
  const double a2 = geom.radius * geom.radius;
  const double h2 = geom.height * geom.height;
  Matrix6d mass = Matrix6d::Zero();
  mass.diagonal() << m, m, m, m * (3.0 * a2 + h2) / 12.0,
      m * (3.0 * a2 + h2) / 12.0, 0.5 * m * a2;
  return mass;
}

PtoMatrices PtoMatrices6Dof(const PtoSetting& pto, const Matrix36d& jinv) {
  const Matrix6d gram = jinv.transpose() * jinv;
  return {pto.stiffness * gram, pto.damping * gram};
}

}  // namespace wecopt
