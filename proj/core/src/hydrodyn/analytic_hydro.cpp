#include "wecopt/hydrodyn/analytic_hydro.hpp"

#include <cmath>
#include <numbers>

#include "wecopt/errors.hpp"

namespace wecopt {
namespace {

constexpr double kPi = std::numbers::pi;

// Depth profiles of the incident potential, normalised by cosh(kh) and
// written with decaying exponentials so large kh does not overflow.
struct DepthProfile {
  double k;
  double h;

  double Cosh(double z) const {
    return (std::exp(k * z) + std::exp(-k * (z + 2.0 * h))) /
           (1.0 + std::exp(-2.0 * k * h));
  }
  double Sinh(double z) const {
    return (std::exp(k * z) - std::exp(-k * (z + 2.0 * h))) /
           (1.0 + std::exp(-2.0 * k * h));
  }
  // Int_{lo}^{hi} C(z) dz
  double Integral(double lo, double hi) const {
    return (Sinh(hi) - Sinh(lo)) / k;
  }
  // Int_{lo}^{hi} (z - zc) C(z) dz
  double FirstMoment(double lo, double hi, double zc) const {
    auto primitive = [&](double z) {
      return (z - zc) * Sinh(z) / k - Cosh(z) / (k * k);
    };
    return primitive(hi) - primitive(lo);
  }
};

// 2 J1(u)/u with its u -> 0 limit.
double Jinc(double u) {
  if (u < 1e-8) return 1.0;
  return 2.0 * std::cyl_bessel_j(1.0, u) / u;
}

}  // namespace

double WaveNumber(double omega, double depth, double gravity) {
  if (!(omega > 0.0) || !(depth > 0.0) || !(gravity > 0.0)) {
    throw DomainError("dispersion relation needs omega, depth, g > 0");
  }
  const double w2 = omega * omega;
  auto residual = [&](double k) { return gravity * k * std::tanh(k * depth) - w2; };

  // The deep-water root is a lower bound because tanh < 1.
  double lo = w2 / gravity;
  double hi = std::max(lo, omega / std::sqrt(gravity * depth));
  while (residual(hi) < 0.0) hi *= 2.0;

  double k = (residual(lo) >= 0.0) ? lo : 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = residual(k);
    if (std::abs(f) <= 1e-14 * w2) break;
    if (f < 0.0) {
      lo = k;
    } else {
      hi = k;
    }
    const double t = std::tanh(k * depth);
    const double df = gravity * (t + k * depth * (1.0 - t * t));
    double next = k - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    k = next;
  }
  return k;
}

double GroupVelocity(double omega, double depth, double gravity) {
  const double k = WaveNumber(omega, depth, gravity);
  const double x = 2.0 * k * depth;
  const double ratio = x > 700.0 ? 0.0 : x / std::sinh(x);
  return 0.5 * omega / k * (1.0 + ratio);
}

HydroCoefficients AnalyticHydro(const WecGeometry& geom,
                                const FrequencyGrid& grid) {
  geom.Validate();
  const double a = geom.radius;
  const double height = geom.height;
  const double rho = geom.water_density;
  const double g = geom.gravity;
  const double z_top = -geom.submergence;
  const double z_bot = z_top - height;
  const double z_c = geom.CentroidZ();
  const Complex i(0.0, 1.0);

  Matrix6d added = Matrix6d::Zero();
  const double displaced = rho * geom.Volume();
  added(kSurge, kSurge) = displaced;
  added(kSway, kSway) = displaced;
  added(kHeave, kHeave) = 8.0 / 3.0 * rho * a * a * a;
  const double rot = rho * (16.0 / 45.0 * std::pow(a, 5) +
                            kPi * a * a * height * height * height / 12.0);
  added(kRoll, kRoll) = rot;
  added(kPitch, kPitch) = rot;

  HydroCoefficients out{grid, {}, {}, {}};
  out.added_mass.assign(grid.size(), added);
  out.radiation_damping.reserve(grid.size());
  out.excitation.reserve(grid.size());

  for (double w : grid.omegas()) {
    const double k = WaveNumber(w, geom.water_depth, g);
    const double cg = GroupVelocity(w, geom.water_depth, g);
    const DepthProfile profile{k, geom.water_depth};
    const double ka = k * a;
    const double j1 = std::cyl_bessel_j(1.0, ka);
    const double j2 = std::cyl_bessel_j(2.0, ka);
    const double cap_diff = profile.Cosh(z_top) - profile.Cosh(z_bot);

    Vector6cd x = Vector6cd::Zero();
    x(kSurge) = -2.0 * kPi * i * rho * g * a * j1 * profile.Integral(z_bot, z_top);
    x(kHeave) = -kPi * a * a * rho * g * Jinc(ka) * cap_diff;
    x(kPitch) = 2.0 * kPi * i * rho * g * a *
                (a * j2 / k * cap_diff -
                 j1 * profile.FirstMoment(z_bot, z_top, z_c));

    const double c = k / (8.0 * rho * g * cg);
    Matrix6d b = Matrix6d::Zero();
    b(kSurge, kSurge) = c * std::norm(x(kSurge));
    b(kSway, kSway) = b(kSurge, kSurge);
    b(kHeave, kHeave) = 2.0 * c * std::norm(x(kHeave));
    b(kPitch, kPitch) = c * std::norm(x(kPitch));
    b(kRoll, kRoll) = b(kPitch, kPitch);
    const double cross = c * std::real(x(kSurge) * std::conj(x(kPitch)));
    b(kSurge, kPitch) = b(kPitch, kSurge) = cross;
    b(kSway, kRoll) = b(kRoll, kSway) = -cross;

    out.radiation_damping.push_back(b);
    out.excitation.push_back(x);
  }
  return out;
}

}  // namespace wecopt
