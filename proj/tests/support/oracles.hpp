#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wecopt/dynamics/geometry.hpp"
#include "wecopt/dynamics/kinematics.hpp"
#include "wecopt/hydrodyn/drag.hpp"
#include "wecopt/hydrodyn/hydro_coefficients.hpp"
#include "wecopt/hydrodyn/spectrum.hpp"
#include "wecopt/linalg.hpp"

namespace wecopt::testing {

double Sphere(std::span<const double> x);
double Rastrigin(std::span<const double> x);

/// Response PSD from a direct inverse of the full impedance, without any
/// linearisation: H = [-w^2 (M + A) + i w (B + B_pto) + K_pto]^-1,
/// S_x = H S_eta diag(|f|^2) H^*.
std::vector<Matrix6cd> ClosedFormPsd(const WecGeometry& geom,
                                     const HydroCoefficients& hydro,
                                     const PtoSetting& pto, const SeaState& sea);

/// Hydro data for the heave-only surrogate: A and B frozen at their values
/// at `omega_ref`, excitation zero except heave.
HydroCoefficients HeaveSurrogateHydro(const WecGeometry& geom,
                                      const FrequencyGrid& grid, double omega_ref);

/// 1-DOF heave oscillator with quadratic drag, integrated in time.
struct HeaveOscillator {
  double inertia = 0.0;    // m + A33
  double damping = 0.0;    // B33 + B_pto,33
  double stiffness = 0.0;  // K_pto,33
  double drag = 0.0;       // 1/2 rho Cd3 A3
  double pto_damping = 0.0;  // part of `damping` that absorbs power
};

struct TimeDomainOptions {
  double duration = 3600.0;  // recorded [s]
  double ramp = 300.0;       // discarded start-up [s]
  double dt = 0.05;
  std::size_t components = 2000;
};

/// Mean absorbed power of one random-phase realisation. The force is a sum
/// of harmonics with amplitudes sqrt(2 S_F(w_j) dw), w_j drawn uniformly
/// inside equal bins spanning the hydro grid, S_F = S_eta |X3|^2.
double SimulateHeavePower(const HeaveOscillator& osc, const HydroCoefficients& hydro,
                          const SeaState& sea, std::uint64_t seed,
                          const TimeDomainOptions& options = {});

}  // namespace wecopt::testing
