#pragma once

#include <array>
#include <span>
#include <vector>

#include "wecopt/dynamics/geometry.hpp"
#include "wecopt/dynamics/kinematics.hpp"
#include "wecopt/hydrodyn/drag.hpp"
#include "wecopt/hydrodyn/hydro_coefficients.hpp"
#include "wecopt/hydrodyn/spectrum.hpp"
#include "wecopt/linalg.hpp"

namespace wecopt {

/// How the equivalent damping is advanced between passes of the
/// linearisation loop. Both stop on the same criterion.
enum class LinearisationUpdate {
  /// B_eq[n+1] = G(B_eq[n]) where G is the Gaussian drag linearisation.
  kDirect,
  /// Per-DOF secant step on G(B) - B, kept inside the bracket
  /// [min(B, G(B)), max(B, G(B))]. Converges where kDirect oscillates
  /// (drag-dominated response).
  kSecant,
};

struct SolverOptions {
  /// Stop when every |G(B_eq) - B_eq| < tolerance [N s/m, N m s].
  double tolerance = 0.01;
  int max_iterations = 50;
  LinearisationUpdate update = LinearisationUpdate::kSecant;
  /// Keep the full response PSD matrix S_x at every grid node.
  bool keep_psd = false;
};

/// Stationary response statistics of one design in one sea state.
struct SpectralResponse {
  std::array<double, 6> b_eq{};        // diagonal of B_eq
  std::array<double, 6> sigma_x{};     // displacement std devs
  std::array<double, 6> sigma_xdot{};  // velocity std devs
  std::array<double, 3> sigma_q{};     // tether excursion std devs [m]
  std::array<double, 3> sigma_qdot{};  // tether rate std devs [m/s]
  double power = 0.0;                  // mean absorbed power [W]
  int iterations = 0;
  bool converged = false;
  /// S_x(w_i), only filled when SolverOptions::keep_psd is set.
  std::vector<Matrix6cd> psd;
};

/// Linearised equations of motion of one geometry. Holds everything that
/// does not depend on the PTO setting or the sea state, so a design can be
/// solved for many sea states cheaply. Immutable and thread safe.
///
/// For each pass of the loop, at every grid frequency
///
///   H(w)   = [-w^2 (M + A) + i w (B + B_pto + B_eq) + K_pto]^-1
///   S_F(w) = S_eta(w) diag(|f_exc,i|^2)
///   S_x(w) = H S_F H^*
///
/// then sigma_xdot_i^2 = Int w^2 S_x,ii dw (trapezoid on the hydro grid) and
/// G_i = 1/2 rho Cd_i Ad_i sqrt(8/pi) sigma_xdot_i. The first pass uses
/// B_eq = 0. Power is b_pto * sum_k sigma_qdot_k^2 with
/// S_q = J^-1 S_x J^-T.
class SpectralModel {
 public:
  /// Throws GeometryError / DomainError on invalid inputs.
  SpectralModel(const WecGeometry& geom, HydroCoefficients hydro,
                DragModel drag);

  /// Throws NumericalError naming the frequency if the impedance is
  /// singular. A response that misses the tolerance within the iteration cap
  /// is returned with converged = false.
  SpectralResponse Solve(const PtoSetting& pto, const SeaState& sea,
                         const SolverOptions& options = {}) const;

  /// Solves several (pto, sea) cases in lock step, sweeping frequencies in
  /// the outer loop and assembling each impedance from the raw matrices.
  /// Same results as calling Solve per case, up to rounding.
  std::vector<SpectralResponse> SolveBatch(
      std::span<const PtoSetting> ptos, std::span<const SeaState> seas,
      const SolverOptions& options = {}) const;

  /// Gaussian linearisation of the quadratic drag for given velocity std
  /// devs: 1/2 rho Cd_i Ad_i sqrt(8/pi) sigma_i.
  std::array<double, 6> EquivalentDamping(
      const std::array<double, 6>& sigma_xdot) const;

  const WecGeometry& geometry() const { return geom_; }
  const HydroCoefficients& hydro() const { return hydro_; }
  const DragModel& drag() const { return drag_; }
  const Matrix6d& mass() const { return mass_; }
  const Matrix36d& inverse_jacobian() const { return jinv_; }

 private:
  struct Pass;
  class Iteration;

  WecGeometry geom_;
  HydroCoefficients hydro_;
  DragModel drag_;
  Matrix6d mass_;
  Matrix36d jinv_;
  // -w^2 (M + A) + i w B per node.
  std::vector<Matrix6cd> base_impedance_;
  // |f_exc,i|^2 per node.
  std::vector<Vector6d> excitation_power_;
};

/// One-shot convenience wrapper around SpectralModel.
SpectralResponse SolveSpectral(const WecGeometry& geom,
                               const HydroCoefficients& hydro,
                               const DragModel& drag, const PtoSetting& pto,
                               const SeaState& sea,
                               const SolverOptions& options = {});

}  // namespace wecopt
