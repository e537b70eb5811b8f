#include "wecopt/hydrodyn/hydro_provider.hpp"

#include "wecopt/hydrodyn/analytic_hydro.hpp"
#include "wecopt/hydrodyn/hydro_table.hpp"

namespace wecopt {

HydroCoefficients AnalyticHydroProvider::Coefficients(
    const WecGeometry& geom, const FrequencyGrid& grid) const {
  return AnalyticHydro(geom, grid);
}

TableHydroProvider::TableHydroProvider(HydroCoefficients table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  table_.Validate();
}

HydroCoefficients TableHydroProvider::Coefficients(
    const WecGeometry& /*geom*/, const FrequencyGrid& grid) const {
  if (grid == table_.grid) return table_;
  return table_.Resample(grid);
}

std::shared_ptr<const HydroProvider> MakeHydroProvider(const std::string& source) {
  if (source.empty() || source == "analytic") {
    return std::make_shared<AnalyticHydroProvider>();
  }
  return std::make_shared<TableHydroProvider>(LoadHydroTable(source), source);
}

}  // namespace wecopt
