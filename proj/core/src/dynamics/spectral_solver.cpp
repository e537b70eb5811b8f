#include "wecopt/dynamics/spectral_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wecopt/errors.hpp"

namespace wecopt {
namespace {

const double kSqrt8OverPi = std::sqrt(8.0 / std::numbers::pi);

// Per-node spectral densities that get integrated over frequency.
struct NodeDensities {
  std::array<double, 6> s_x{};
  std::array<double, 3> s_q{};
};

// Running trapezoid sums of S and w^2 S.
class SpectralIntegrals {
 public:
  void Add(double omega, const NodeDensities& node) {
    const double w2 = omega * omega;
    if (has_prev_) {
      const double half = 0.5 * (omega - prev_omega_);
      for (int d = 0; d < 6; ++d) {
        var_x[d] += half * (node.s_x[d] + prev_.s_x[d]);
        var_xdot[d] += half * (w2 * node.s_x[d] + prev_w2_ * prev_.s_x[d]);
      }
      for (int k = 0; k < 3; ++k) {
        var_q[k] += half * (node.s_q[k] + prev_.s_q[k]);
        var_qdot[k] += half * (w2 * node.s_q[k] + prev_w2_ * prev_.s_q[k]);
      }
    }
    prev_ = node;
    prev_omega_ = omega;
    prev_w2_ = w2;
    has_prev_ = true;
  }

  std::array<double, 6> var_x{};
  std::array<double, 6> var_xdot{};
  std::array<double, 3> var_q{};
  std::array<double, 3> var_qdot{};

 private:
  NodeDensities prev_;
  double prev_omega_ = 0.0;
  double prev_w2_ = 0.0;
  bool has_prev_ = false;
};

void CheckPto(const PtoSetting& pto) {
  if (!std::isfinite(pto.stiffness) || !std::isfinite(pto.damping) ||
      pto.stiffness < 0.0 || pto.damping < 0.0) {
    throw DomainError("PTO stiffness and damping must be finite and >= 0");
  }
}

// Factorises Z and accumulates S_x (diagonal), S_q and optionally the full
// PSD from the excited columns of H = Z^-1.
NodeDensities ResponseAtNode(double omega, const Matrix6cd& impedance,
                             const Vector6d& force_psd, const Matrix36d& jinv,
                             Matrix6cd* psd) {
  const Eigen::PartialPivLU<Matrix6cd> lu(impedance);
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (!(pivots.minCoeff() > 1e-13 * pivots.maxCoeff())) {
    throw NumericalError(omega, "singular impedance matrix");
  }
  NodeDensities out;
  if (psd != nullptr) psd->setZero();
  for (int j = 0; j < 6; ++j) {
    const double sf = force_psd(j);
    if (sf <= 0.0) continue;
    const Vector6cd h = lu.solve(Vector6cd::Unit(j));
    if (!h.allFinite()) throw NumericalError(omega, "non-finite response");
    for (int d = 0; d < 6; ++d) out.s_x[d] += sf * std::norm(h(d));
    const Eigen::Matrix<Complex, 3, 1> hq = jinv.cast<Complex>() * h;
    for (int k = 0; k < 3; ++k) out.s_q[k] += sf * std::norm(hq(k));
    if (psd != nullptr) *psd += sf * h * h.adjoint();
  }
  return out;
}

// Fills the statistics part of a response from integrated variances.
void FillStatistics(const SpectralIntegrals& sums, const PtoSetting& pto,
                    SpectralResponse& r) {
  r.power = 0.0;
  for (int d = 0; d < 6; ++d) {
    r.sigma_x[d] = std::sqrt(std::max(0.0, sums.var_x[d]));
    r.sigma_xdot[d] = std::sqrt(std::max(0.0, sums.var_xdot[d]));
  }
  for (int k = 0; k < 3; ++k) {
    r.sigma_q[k] = std::sqrt(std::max(0.0, sums.var_q[k]));
    r.sigma_qdot[k] = std::sqrt(std::max(0.0, sums.var_qdot[k]));
    r.power += pto.damping * std::max(0.0, sums.var_qdot[k]);
  }
}

// Advances the equivalent damping estimate between passes.
class DampingUpdate {
 public:
  explicit DampingUpdate(LinearisationUpdate rule) : rule_(rule) {}

  std::array<double, 6> Next(const std::array<double, 6>& current,
                             const std::array<double, 6>& target) {
    std::array<double, 6> next = target;
    if (rule_ == LinearisationUpdate::kSecant) {
      for (int d = 0; d < 6; ++d) {
        const double x = current[d];
        const double r = target[d] - x;
        const double lo = std::min(x, target[d]);
        const double hi = std::max(x, target[d]);
        double step = target[d];
        if (has_prev_ && prev_x_[d] != x && r != prev_r_[d]) {
          step = x - r * (x - prev_x_[d]) / (r - prev_r_[d]);
        }
        if (!(step >= lo && step <= hi)) step = 0.5 * (lo + hi);
        next[d] = step;
        prev_x_[d] = x;
        prev_r_[d] = r;
      }
      has_prev_ = true;
    }
    return next;
  }

 private:
  LinearisationUpdate rule_;
  bool has_prev_ = false;
  std::array<double, 6> prev_x_{};
  std::array<double, 6> prev_r_{};
};

double MaxAbsDifference(const std::array<double, 6>& a,
                        const std::array<double, 6>& b) {
  double m = 0.0;
  for (int d = 0; d < 6; ++d) m = std::max(m, std::abs(a[d] - b[d]));
  return m;
}

}  // namespace

SpectralModel::SpectralModel(const WecGeometry& geom, HydroCoefficients hydro,
                             DragModel drag)
    : geom_(geom), hydro_(std::move(hydro)), drag_(drag) {
  geom_.Validate();
  hydro_.Validate();
  drag_.Validate();
  mass_ = MassMatrix(geom_);
  jinv_ = InverseJacobian(geom_);

  const std::size_t n = hydro_.grid.size();
  base_impedance_.resize(n);
  excitation_power_.resize(n);
  const Complex i(0.0, 1.0);
  for (std::size_t node = 0; node < n; ++node) {
    const double w = hydro_.grid[node];
    base_impedance_[node] =
        (-w * w * (mass_ + hydro_.added_mass[node])).cast<Complex>() +
        i * w * hydro_.radiation_damping[node].cast<Complex>();
    excitation_power_[node] = hydro_.excitation[node].cwiseAbs2();
  }
}

std::array<double, 6> SpectralModel::EquivalentDamping(
    const std::array<double, 6>& sigma_xdot) const {
  std::array<double, 6> b{};
  for (int d = 0; d < 6; ++d) {
    b[d] = drag_.QuadraticCoefficient(d, geom_.water_density) * kSqrt8OverPi *
           sigma_xdot[d];
  }
  return b;
}

SpectralResponse SpectralModel::Solve(const PtoSetting& pto,
                                      const SeaState& sea,
                                      const SolverOptions& options) const {
  sea.Validate();
  CheckPto(pto);
  if (options.max_iterations < 1) {
    throw DomainError("max_iterations must be >= 1");
  }
  const std::size_t n = hydro_.grid.size();
  const PtoMatrices pm = PtoMatrices6Dof(pto, jinv_);
  const Complex i(0.0, 1.0);

  std::vector<Matrix6cd> fixed(n);
  std::vector<Vector6d> force_psd(n);
  for (std::size_t node = 0; node < n; ++node) {
    const double w = hydro_.grid[node];
    fixed[node] = base_impedance_[node] + pm.stiffness.cast<Complex>() +
                  i * w * pm.damping.cast<Complex>();
    force_psd[node] = PiersonMoskowitz(sea, w) * excitation_power_[node];
  }

  SpectralResponse response;
  if (options.keep_psd) response.psd.resize(n);
  std::array<double, 6> b_eq{};
  DampingUpdate update(options.update);

  for (int it = 1;; ++it) {
    SpectralIntegrals sums;
    for (std::size_t node = 0; node < n; ++node) {
      const double w = hydro_.grid[node];
      Matrix6cd z = fixed[node];
      for (int d = 0; d < 6; ++d) z(d, d) += i * w * b_eq[d];
      Matrix6cd* psd = options.keep_psd ? &response.psd[node] : nullptr;
      sums.Add(w, ResponseAtNode(w, z, force_psd[node], jinv_, psd));
    }
    FillStatistics(sums, pto, response);
    const std::array<double, 6> target = EquivalentDamping(response.sigma_xdot);
    const bool done = MaxAbsDifference(target, b_eq) < options.tolerance;
    if (done || it >= options.max_iterations) {
      response.b_eq = b_eq;
      response.iterations = it;
      response.converged = done;
      return response;
    }
    b_eq = update.Next(b_eq, target);
  }
}

std::vector<SpectralResponse> SpectralModel::SolveBatch(
    std::span<const PtoSetting> ptos, std::span<const SeaState> seas,
    const SolverOptions& options) const {
  if (ptos.size() != seas.size()) {
    throw DomainError("batch solve: PTO and sea-state counts differ");
  }
  for (const auto& s : seas) s.Validate();
  for (const auto& p : ptos) CheckPto(p);
  if (options.max_iterations < 1) {
    throw DomainError("max_iterations must be >= 1");
  }

  const std::size_t cases = ptos.size();
  const std::size_t n = hydro_.grid.size();
  std::vector<PtoMatrices> pm;
  pm.reserve(cases);
  for (const auto& p : ptos) pm.push_back(PtoMatrices6Dof(p, jinv_));

  std::vector<SpectralResponse> out(cases);
  std::vector<std::array<double, 6>> b_eq(cases);
  std::vector<DampingUpdate> updates(cases, DampingUpdate(options.update));
  std::vector<bool> active(cases, true);
  if (options.keep_psd) {
    for (auto& r : out) r.psd.resize(n);
  }
  const Complex i(0.0, 1.0);

  for (int it = 1; std::find(active.begin(), active.end(), true) != active.end();
       ++it) {
    std::vector<SpectralIntegrals> sums(cases);
    for (std::size_t node = 0; node < n; ++node) {
      const double w = hydro_.grid[node];
      const Matrix6d inertia = mass_ + hydro_.added_mass[node];
      const Vector6d f2 = hydro_.excitation[node].cwiseAbs2();
      for (std::size_t c = 0; c < cases; ++c) {
        if (!active[c]) continue;
        Matrix6d damping = hydro_.radiation_damping[node] + pm[c].damping;
        for (int d = 0; d < 6; ++d) damping(d, d) += b_eq[c][d];
        const Matrix6cd z = (pm[c].stiffness - w * w * inertia).cast<Complex>() +
                            i * w * damping.cast<Complex>();
        const Vector6d force_psd = PiersonMoskowitz(seas[c], w) * f2;
        Matrix6cd* psd = options.keep_psd ? &out[c].psd[node] : nullptr;
        sums[c].Add(w, ResponseAtNode(w, z, force_psd, jinv_, psd));
      }
    }
    for (std::size_t c = 0; c < cases; ++c) {
      if (!active[c]) continue;
      FillStatistics(sums[c], ptos[c], out[c]);
      const auto target = EquivalentDamping(out[c].sigma_xdot);
      const bool done = MaxAbsDifference(target, b_eq[c]) < options.tolerance;
      if (done || it >= options.max_iterations) {
        out[c].b_eq = b_eq[c];
        out[c].iterations = it;
        out[c].converged = done;
        active[c] = false;
      } else {
        b_eq[c] = updates[c].Next(b_eq[c], target);
      }
    }
  }
  return out;
}

SpectralResponse SolveSpectral(const WecGeometry& geom,
                               const HydroCoefficients& hydro,
                               const DragModel& drag, const PtoSetting& pto,
                               const SeaState& sea,
                               const SolverOptions& options) {
  return SpectralModel(geom, hydro, drag).Solve(pto, sea, options);
}

}  // namespace wecopt
