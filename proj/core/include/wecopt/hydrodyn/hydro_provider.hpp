#pragma once

#include <memory>
#include <string>

#include "wecopt/dynamics/geometry.hpp"
#include "wecopt/hydrodyn/frequency_grid.hpp"
#include "wecopt/hydrodyn/hydro_coefficients.hpp"

namespace wecopt {

/// Source of hydrodynamic coefficients for a geometry on a solver grid.
/// Implementations must be immutable and thread safe.
class HydroProvider {
 public:
  virtual ~HydroProvider() = default;

  virtual HydroCoefficients Coefficients(const WecGeometry& geom,
                                         const FrequencyGrid& grid) const = 0;
  virtual std::string Name() const = 0;
};

/// Closed-form approximation, recomputed for every geometry.
class AnalyticHydroProvider final : public HydroProvider {
 public:
  HydroCoefficients Coefficients(const WecGeometry& geom,
                                 const FrequencyGrid& grid) const override;
  std::string Name() const override { return "analytic"; }
};

/// Imported table for one fixed hull. The geometry argument is ignored, so
/// this backend only makes sense when the radius and height are not varied.
class TableHydroProvider final : public HydroProvider {
 public:
  explicit TableHydroProvider(HydroCoefficients table, std::string name = "table");

  HydroCoefficients Coefficients(const WecGeometry& geom,
                                 const FrequencyGrid& grid) const override;
  std::string Name() const override { return name_; }

 private:
  HydroCoefficients table_;
  std::string name_;
};

/// "analytic" or a path to a hydro table.
std::shared_ptr<const HydroProvider> MakeHydroProvider(const std::string& source);

}  // namespace wecopt
