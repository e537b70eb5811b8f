#pragma once

#include <cstddef>
#include <vector>

#include "wecopt/optimize/common.hpp"

namespace wecopt {

/// Coordinates handled by each phase of a block hybrid.
struct HybridBlocks {
  std::vector<std::size_t> de_block;
  std::vector<std::size_t> nm_block;
};

/// Alternating block-coordinate search. Each round runs DE over `de_block`
/// (budget hybrid.de_budget) with the other coordinates held at the best
/// point so far, then Nelder-Mead over `nm_block` (budget hybrid.nm_budget)
/// the same way. Rounds repeat until `config.budget` is spent; the inner
/// runs draw from that single budget. From round 1 on, DE seeds one member
/// and NM one vertex with the current best block values.
RunTrace RunBlockHybrid(const Objective& objective, const Bounds& bounds,
                        std::vector<double> start, const HybridBlocks& blocks,
                        const OptimiserConfig& config);

/// DE-NM on the design vector with radius and aspect ratio held fixed: DE
/// over the PTO block (coordinates 4..), NM over the two tether angles
/// (coordinates 2, 3). Starting angles are drawn uniformly from the bounds.
RunTrace RunHybridDeNm(const Objective& objective, double radius, double aspect,
                       const Bounds& bounds, const OptimiserConfig& config);

}  // namespace wecopt
