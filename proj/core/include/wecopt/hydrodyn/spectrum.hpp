#pragma once

namespace wecopt {

/// Stationary irregular sea: significant wave height [m] and peak period [s].
struct SeaState {
  double hs = 0.0;
  double tp = 0.0;

  /// Throws DomainError unless hs > 0 and tp > 0.
  void Validate() const;
  double PeakFrequency() const;

  bool operator==(const SeaState&) const = default;
};

/// One-sided Pierson-Moskowitz wave elevation density S(omega) [m^2 s]:
///
///   S(w) = 5/16 Hs^2 wp^4 w^-5 exp(-5/4 (wp/w)^4),  wp = 2 pi / Tp
///
/// The zeroth moment is Hs^2 / 16.
double PiersonMoskowitz(const SeaState& sea, double omega);

}  // namespace wecopt
