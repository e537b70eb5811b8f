#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wecopt/dynamics/spectral_solver.hpp"
#include "wecopt/hydrodyn/frequency_grid.hpp"
#include "wecopt/hydrodyn/hydro_provider.hpp"
#include "wecopt/objectives/climate.hpp"
#include "wecopt/objectives/design.hpp"

namespace wecopt {

// Anchor sizing reference: three piles of 225 t for a 1.94 MN peak load.
inline constexpr double kReferenceAnchorMass = 225.0e3;  // kg
inline constexpr double kReferencePeakForce = 1.94e6;    // N
inline constexpr double kHoursPerYear = 8760.0;

enum class ObjectiveKind { kPower, kLcoe };

/// "power" / "lcoe"; throws ConfigError otherwise.
ObjectiveKind ParseObjectiveKind(const std::string& name);
std::string ToString(ObjectiveKind kind);

/// Anchor mass scaled linearly from the reference case.
double AnchorMass(double peak_force);

/// LCoE proxy (8760 P / m)^-1/2 with P in W and m in kg; +inf for P <= 0.
double LcoeProxy(double p_aap_watts, double significant_mass);

struct EvaluationRecord {
  DesignVector design;
  double p_aap = 0.0;        // [W]
  double lcoe = 0.0;         // proxy, dimensionless
  double buoy_mass = 0.0;    // [kg]
  double anchor_mass = 0.0;  // [kg]
  double peak_force = 0.0;   // [N], max over sea states
  std::vector<double> state_power;  // [W], zero where not converged
  std::vector<int> state_iterations;
  std::vector<bool> state_converged;

  bool converged() const;
};

/// Value the optimisers minimise: -P_AAP or LCoE.
double MinimisationValue(const EvaluationRecord& record, ObjectiveKind kind);
/// Value reported to users: P_AAP [W] or LCoE.
double ReportedValue(const EvaluationRecord& record, ObjectiveKind kind);

/// One JSON object per line, fixed key order.
std::string ToJsonLine(const EvaluationRecord& record);

/// Evaluates designs against a wave climate. Immutable after construction;
/// Evaluate may be called concurrently.
class Evaluator {
 public:
  Evaluator(WaveClimate climate, std::shared_ptr<const HydroProvider> hydro,
            FrequencyGrid grid = FrequencyGrid::Default(),
            SolverOptions options = {}, WecGeometry base = {});

  /// All sea states solved in one batch. Throws DomainError if the design
  /// is outside the admissible ranges or sized for another climate.
  EvaluationRecord Evaluate(const DesignVector& design) const;
  /// Same quantities, one SpectralModel::Solve per sea state.
  EvaluationRecord EvaluatePerState(const DesignVector& design) const;

  double AnnualAveragePower(const DesignVector& design) const;
  /// (buoy mass, anchor mass) [kg].
  std::pair<double, double> SignificantMass(const DesignVector& design) const;
  double Lcoe(const DesignVector& design) const;

  /// Decodes an internal vector and returns MinimisationValue.
  double Objective(std::span<const double> internal, ObjectiveKind kind) const;

  const WaveClimate& climate() const { return climate_; }
  const DesignSpace& space() const { return space_; }
  const FrequencyGrid& grid() const { return grid_; }
  const SolverOptions& options() const { return options_; }
  const HydroProvider& hydro() const { return *hydro_; }

 private:
  EvaluationRecord Assemble(const DesignVector& design,
                            const WecGeometry& geom,
                            const std::vector<SpectralResponse>& responses) const;
  SpectralModel BuildModel(const WecGeometry& geom) const;

  WaveClimate climate_;
  std::shared_ptr<const HydroProvider> hydro_;
  FrequencyGrid grid_;
  SolverOptions options_;
  WecGeometry base_;
  DesignSpace space_;
};

}  // namespace wecopt
