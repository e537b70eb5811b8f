#include "wecopt/optimize/hybrid.hpp"

#include <numeric>

#include "wecopt/errors.hpp"
#include "wecopt/optimize/algorithms.hpp"

namespace wecopt {
namespace {

// Runs `run` over the coordinates in `block`, the rest fixed at `x`.
template <typename Runner>
void RunPhase(BudgetedObjective& global, const Bounds& bounds,
              const std::vector<std::size_t>& block, std::vector<double>& x,
              OptimiserConfig sub, std::size_t budget, bool warm, Runner run) {
  sub.budget = std::min(budget, global.remaining());
  if (sub.budget == 0 || block.empty()) return;
  sub.initial_points.clear();
  if (warm) {
    std::vector<double> y;
    for (std::size_t i : block) y.push_back(x[i]);
    sub.initial_points.push_back(std::move(y));
  }
  std::vector<double> full = x;
  const Objective local = [&](std::span<const double> y) {
    for (std::size_t k = 0; k < block.size(); ++k) full[block[k]] = y[k];
    return global(full);
  };
  run(local, bounds.Select(block), sub);
  x = global.best_x();
}

}  // namespace

RunTrace RunBlockHybrid(const Objective& objective, const Bounds& bounds,
                        std::vector<double> start, const HybridBlocks& blocks,
                        const OptimiserConfig& config) {
  OptimiserConfig cfg = config;
  cfg.algorithm = Algorithm::kHybridDeNm;
  cfg.Validate();
  if (start.size() != bounds.size()) {
    throw ConfigError("hybrid: start point has the wrong dimension");
  }
  for (auto* block : {&blocks.de_block, &blocks.nm_block}) {
    for (std::size_t i : *block) {
      if (i >= bounds.size()) throw ConfigError("hybrid: block index out of range");
    }
  }
  if (blocks.de_block.empty()) throw ConfigError("hybrid: empty DE block");
  bounds.Clamp(start);

  const Stopwatch clock;
  BudgetedObjective global(objective, cfg.budget);
  std::vector<double> x = std::move(start);
  for (std::uint64_t round = 0; !global.Exhausted(); ++round) {
    OptimiserConfig de = cfg;
    de.algorithm = Algorithm::kDe;
    de.seed = cfg.seed + 2 * round;
    RunPhase(global, bounds, blocks.de_block, x, de, cfg.hybrid.de_budget,
             round > 0, RunDe);
    if (global.Exhausted() || cfg.hybrid.nm_budget == 0) continue;

    OptimiserConfig nm = cfg;
    nm.algorithm = Algorithm::kNelderMead;
    nm.seed = cfg.seed + 2 * round + 1;
    RunPhase(global, bounds, blocks.nm_block, x, nm, cfg.hybrid.nm_budget, true,
             RunNelderMead);
  }
  return global.Finish(ToString(Algorithm::kHybridDeNm), cfg.seed, clock.Seconds());
}

RunTrace RunHybridDeNm(const Objective& objective, double radius, double aspect,
                       const Bounds& bounds, const OptimiserConfig& config) {
  if (bounds.size() < 6 || bounds.size() % 2 != 0) {
    throw ConfigError("hybrid DE-NM: bounds do not describe a design vector");
  }
  const std::vector<double> fixed{radius, aspect};
  for (std::size_t i = 0; i < 2; ++i) {
    if (!(fixed[i] >= bounds.lower(i) && fixed[i] <= bounds.upper(i))) {
      throw DomainError(std::string(i == 0 ? "radius" : "aspect ratio") +
                        " outside its admissible range");
    }
  }
  // Radius and aspect belong to neither block, so they keep these values.
  Rng rng(config.seed);
  std::vector<double> start = bounds.Sample(rng);
  start[0] = radius;
  start[1] = aspect;

  HybridBlocks blocks;
  blocks.nm_block = {2, 3};
  blocks.de_block.resize(bounds.size() - 4);
  std::iota(blocks.de_block.begin(), blocks.de_block.end(), std::size_t{4});
  return RunBlockHybrid(objective, bounds, std::move(start), blocks, config);
}

}  // namespace wecopt
