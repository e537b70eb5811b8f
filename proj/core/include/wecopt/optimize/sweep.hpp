#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "wecopt/objectives/evaluation.hpp"
#include "wecopt/optimize/common.hpp"

namespace wecopt {

struct SurfaceRow {
  double radius = 0.0;
  double aspect = 0.0;
  double objective_value = 0.0;  // P_AAP [W] or LCoE; NaN if failed
  bool converged = false;
  bool failed = false;
  std::string error;
  RunTrace trace;
};

/// One hybrid DE-NM run at fixed (radius, aspect); the best design is
/// re-evaluated to report its objective and convergence. Exceptions are
/// caught and mark the row as failed.
SurfaceRow SweepNode(double radius, double aspect, ObjectiveKind kind,
                     const Evaluator& evaluator, const OptimiserConfig& config);

/// All nodes, radius-major. Every node uses `config.seed`.
std::vector<SurfaceRow> SweepGrid(
    const std::vector<double>& radii, const std::vector<double>& aspects,
    ObjectiveKind kind, const Evaluator& evaluator, const OptimiserConfig& config,
    const std::function<void(const SurfaceRow&)>& on_row = {});

/// Columns `a,aspect,objective_value,converged`.
void WriteSurfaceCsv(std::ostream& out, const std::vector<SurfaceRow>& rows);

}  // namespace wecopt
