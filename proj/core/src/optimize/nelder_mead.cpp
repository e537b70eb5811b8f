#include <algorithm>
#include <numeric>

#include "internal.hpp"
#include "wecopt/optimize/algorithms.hpp"

namespace wecopt {
namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

RunTrace RunNelderMead(const Objective& objective, const Bounds& bounds,
                       const OptimiserConfig& config) {
  OptimiserConfig cfg = config;
  cfg.algorithm = Algorithm::kNelderMead;
  cfg.Validate();
  const Stopwatch clock;
  Rng rng(cfg.seed);
  BudgetedObjective f(objective, cfg.budget);
  const std::size_t n = bounds.size();
  const NelderMeadParams& p = cfg.nelder_mead;

  std::vector<Vertex> simplex;
  for (std::size_t i = 0; i <= n && !f.Exhausted(); ++i) {
    std::vector<double> x = internal::InitialPoint(cfg, i, bounds, rng);
    const double v = f(x);
    simplex.push_back({std::move(x), v});
  }

  auto point = [&](const std::vector<double>& from, const std::vector<double>& to,
                   double t) {
    // from + t (to - from), clamped.
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = from[j] + t * (to[j] - from[j]);
    bounds.Clamp(x);
    return x;
  };

  while (!f.Exhausted()) {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    Vertex& worst = simplex.back();
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    std::vector<double> xr = point(centroid, worst.x, -p.reflection);
    const double fr = f(xr);
    if (fr < simplex.front().f) {
      if (f.Exhausted()) break;
      std::vector<double> xe = point(centroid, xr, p.expansion);
      const double fe = f(xe);
      if (fe < fr) {
        worst = {std::move(xe), fe};
      } else {
        worst = {std::move(xr), fr};
      }
      continue;
    }
    if (fr < simplex[n - 1].f) {
      worst = {std::move(xr), fr};
      continue;
    }
    if (f.Exhausted()) break;
    bool accepted = false;
    if (fr < worst.f) {
      std::vector<double> xc = point(centroid, xr, p.contraction);
      const double fc = f(xc);
      if (fc <= fr) {
        worst = {std::move(xc), fc};
        accepted = true;
      }
    } else {
      std::vector<double> xc = point(centroid, worst.x, p.contraction);
      const double fc = f(xc);
      if (fc < worst.f) {
        worst = {std::move(xc), fc};
        accepted = true;
      }
    }
    if (accepted) continue;
    for (std::size_t i = 1; i <= n && !f.Exhausted(); ++i) {
      simplex[i].x = point(simplex[0].x, simplex[i].x, p.shrink);
      simplex[i].f = f(simplex[i].x);
    }
  }
  return f.Finish(ToString(Algorithm::kNelderMead), cfg.seed, clock.Seconds());
}

}  // namespace wecopt
