#pragma once

namespace wecopt {

/// Submerged cylindrical buoy held by three tethers.
///
/// The body frame origin is the buoy centroid; z points up, still water level
/// is at z = 0 in the world frame. The buoy mass is always half the displaced
/// water mass.
struct WecGeometry {
  double radius = 5.5;                   // a [m]
  double height = 5.5;                   // H [m]
  double submergence = 2.0;              // top of buoy below still water [m]
  double water_depth = 50.0;             // h [m]
  double tether_inclination_deg = 45.0;  // from vertical
  double attachment_angle_deg = 45.0;    // from the downward body axis
  double water_density = 1025.0;         // [kg/m^3]
  double gravity = 9.81;                 // [m/s^2]

  /// Throws GeometryError for impossible layouts: non-positive sizes, a buoy
  /// piercing the surface or the seabed, or angles outside [0, 90) for the
  /// tether and (0, 90) for the attachment direction.
  void Validate() const;

  double AspectRatio() const { return height / radius; }
  double Volume() const;
  double BuoyMass() const;
  /// World z of the centroid (negative).
  double CentroidZ() const { return -(submergence + 0.5 * height); }
};

}  // namespace wecopt
