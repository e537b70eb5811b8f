#include "wecopt/hydrodyn/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "wecopt/errors.hpp"

namespace wecopt {

void SeaState::Validate() const {
  if (!(hs > 0.0) || !std::isfinite(hs)) {
    throw DomainError("sea state: significant wave height must be > 0");
  }
  if (!(tp > 0.0) || !std::isfinite(tp)) {
    throw DomainError("sea state: peak period must be > 0");
  }
}

double SeaState::PeakFrequency() const { return 2.0 * std::numbers::pi / tp; }

double PiersonMoskowitz(const SeaState& sea, double omega) {
  sea.Validate();
  if (!(omega > 0.0)) {
    throw DomainError("Pierson-Moskowitz spectrum needs omega > 0");
  }
  const double wp = sea.PeakFrequency();
  const double r = wp / omega;
  const double r4 = r * r * r * r;
  // Past this point exp() underflows to zero; also avoids inf * 0.
  if (r4 > 1.0e3) return 0.0;
  return 5.0 / 16.0 * sea.hs * sea.hs * r4 / omega * std::exp(-1.25 * r4);
}

}  // namespace wecopt
