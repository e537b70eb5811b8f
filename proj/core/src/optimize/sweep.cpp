#include "wecopt/optimize/sweep.hpp"

#include <cmath>
#include <exception>
#include <ostream>

#include "wecopt/optimize/hybrid.hpp"
#include "wecopt/optimize/trace_io.hpp"

namespace wecopt {

SurfaceRow SweepNode(double radius, double aspect, ObjectiveKind kind,
                     const Evaluator& evaluator, const OptimiserConfig& config) {
  SurfaceRow row;
  row.radius = radius;
  row.aspect = aspect;
  try {
    const DesignSpace& space = evaluator.space();
    const Bounds bounds(space.lower(), space.upper());
    const Objective objective = [&](std::span<const double> x) {
      return evaluator.Objective(x, kind);
    };
    row.trace = RunHybridDeNm(objective, radius, aspect, bounds, config);
    const EvaluationRecord best = evaluator.Evaluate(space.Decode(row.trace.best_x));
    row.objective_value = ReportedValue(best, kind);
    row.converged = best.converged();
  } catch (const std::exception& e) {
    row.failed = true;
    row.error = e.what();
    row.objective_value = std::nan("");
    row.converged = false;
  }
  return row;
}

std::vector<SurfaceRow> SweepGrid(
    const std::vector<double>& radii, const std::vector<double>& aspects,
    ObjectiveKind kind, const Evaluator& evaluator, const OptimiserConfig& config,
    const std::function<void(const SurfaceRow&)>& on_row) {
  std::vector<SurfaceRow> rows;
  for (double a : radii) {
    for (double r : aspects) {
      rows.push_back(SweepNode(a, r, kind, evaluator, config));
      if (on_row) on_row(rows.back());
    }
  }
  return rows;
}

void WriteSurfaceCsv(std::ostream& out, const std::vector<SurfaceRow>& rows) {
  out << "a,aspect,objective_value,converged\n";
  for (const auto& r : rows) {
    out << FormatDouble(r.radius) << ',' << FormatDouble(r.aspect) << ','
        << FormatDouble(r.objective_value) << ',' << (r.converged ? 1 : 0) << '\n';
  }
}

}  // namespace wecopt
