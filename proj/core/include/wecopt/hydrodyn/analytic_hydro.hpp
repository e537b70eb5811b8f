#pragma once

#include "wecopt/dynamics/geometry.hpp"
#include "wecopt/hydrodyn/frequency_grid.hpp"
#include "wecopt/hydrodyn/hydro_coefficients.hpp"

namespace wecopt {

/// Wavenumber k of the finite-depth dispersion relation w^2 = g k tanh(k h).
/// Throws DomainError for non-positive arguments.
double WaveNumber(double omega, double depth, double gravity);

/// Group velocity of linear waves in water of depth h.
double GroupVelocity(double omega, double depth, double gravity);

/// Closed-form APPROXIMATION of the buoy hydrodynamics, for use when no
/// boundary-element data are available. It is not a substitute for BEM
/// coefficients; absolute power levels are indicative only.
///
/// Excitation: Froude-Krylov force, i.e. the incident linear-wave dynamic
/// pressure p = rho g cosh(k(z+h))/cosh(kh) exp(ikx) integrated over the
/// hull (side wall, top and bottom caps), for waves travelling along +x:
///
///   surge  X1 = -2 pi i rho g a J1(ka) Int C dz
///   heave  X3 =  pi a^2 rho g (2 J1(ka)/ka) (C(z_bot) - C(z_top))
///   pitch  X5 =  2 pi i rho g a (a J2(ka)/k (C(z_top) - C(z_bot))
///                                - J1(ka) Int (z - z_c) C dz)
///
/// with C(z) = cosh(k(z+h))/cosh(kh). Sway, roll and yaw are not excited.
///
/// Radiation damping: Haskind relation applied to that excitation,
/// B_jj = k / (8 rho g c_g) Int |X_j(beta)|^2 dbeta, which gives
/// B33 = k|X3|^2/(4 rho g c_g), B11 = B22 = k|X1|^2/(8 rho g c_g), the same
/// for pitch/roll, and the rank-one surge-pitch (sway-roll) coupling. The
/// result is symmetric positive semidefinite by construction.
///
/// Added mass (frequency independent):
///   surge, sway : rho V                           (Ca = 1)
///   heave       : 8/3 rho a^3                     (end-cap disk value)
///   roll, pitch : rho (16/45 a^5 + pi a^2 H^3/12) (caps + strip theory)
///   yaw         : 0
///
/// Throws GeometryError if the buoy pierces the surface or the seabed.
HydroCoefficients AnalyticHydro(const WecGeometry& geom,
                                const FrequencyGrid& grid);

}  // namespace wecopt
