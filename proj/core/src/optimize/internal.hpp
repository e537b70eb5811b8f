#pragma once

#include <vector>

#include "wecopt/errors.hpp"
#include "wecopt/optimize/common.hpp"

namespace wecopt::internal {

// Member `index` of an initial population: the configured start point when
// there is one (clamped into the box), a uniform sample otherwise.
inline std::vector<double> InitialPoint(const OptimiserConfig& config,
                                        std::size_t index, const Bounds& bounds,
                                        Rng& rng) {
  if (index < config.initial_points.size()) {
    std::vector<double> x = config.initial_points[index];
    if (x.size() != bounds.size()) {
      throw ConfigError("initial point has the wrong dimension");
    }
    bounds.Clamp(x);
    return x;
  }
  return bounds.Sample(rng);
}

}  // namespace wecopt::internal
