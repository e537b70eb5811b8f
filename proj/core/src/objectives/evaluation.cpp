#include "wecopt/objectives/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "wecopt/dynamics/tether.hpp"
#include "wecopt/errors.hpp"
#include "wecopt/hydrodyn/drag.hpp"

namespace wecopt {

ObjectiveKind ParseObjectiveKind(const std::string& name) {
  if (name == "power") return ObjectiveKind::kPower;
  if (name == "lcoe") return ObjectiveKind::kLcoe;
  throw ConfigError("unknown objective '" + name + "' (power | lcoe)");
}

std::string ToString(ObjectiveKind kind) {
  return kind == ObjectiveKind::kPower ? "power" : "lcoe";
}

double AnchorMass(double peak_force) {
  return kReferenceAnchorMass / kReferencePeakForce * peak_force;
}

double LcoeProxy(double p_aap_watts, double significant_mass) {
  if (!(p_aap_watts > 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(kHoursPerYear * p_aap_watts / significant_mass);
}

bool EvaluationRecord::converged() const {
  return std::all_of(state_converged.begin(), state_converged.end(),
                     [](bool c) { return c; });
}

double MinimisationValue(const EvaluationRecord& record, ObjectiveKind kind) {
  return kind == ObjectiveKind::kPower ? -record.p_aap : record.lcoe;
}

double ReportedValue(const EvaluationRecord& record, ObjectiveKind kind) {
  return kind == ObjectiveKind::kPower ? record.p_aap : record.lcoe;
}

std::string ToJsonLine(const EvaluationRecord& r) {
  nlohmann::ordered_json j;
  j["a"] = r.design.radius;
  j["aspect_ratio"] = r.design.aspect_ratio;
  j["tether_inclination_deg"] = r.design.tether_inclination_deg;
  j["attachment_angle_deg"] = r.design.attachment_angle_deg;
  j["stiffness"] = r.design.stiffness;
  j["damping"] = r.design.damping;
  j["p_aap_w"] = r.p_aap;
  // JSON has no infinity; a null LCoE means zero power.
  if (std::isfinite(r.lcoe)) {
    j["lcoe"] = r.lcoe;
  } else {
    j["lcoe"] = nullptr;
  }
  j["buoy_mass_kg"] = r.buoy_mass;
  j["anchor_mass_kg"] = r.anchor_mass;
  j["peak_force_n"] = r.peak_force;
  j["state_power_w"] = r.state_power;
  j["state_iterations"] = r.state_iterations;
  j["state_converged"] = r.state_converged;
  j["converged"] = r.converged();
  return j.dump();
}

Evaluator::Evaluator(WaveClimate climate,
                     std::shared_ptr<const HydroProvider> hydro,
                     FrequencyGrid grid, SolverOptions options,
                     WecGeometry base)
    : climate_(std::move(climate)),
      hydro_(std::move(hydro)),
      grid_(std::move(grid)),
      options_(options),
      base_(base),
      space_(climate_.states.empty() ? 1 : climate_.size()) {
  climate_.Validate();
  if (!hydro_) throw ConfigError("evaluator needs a hydro provider");
}

SpectralModel Evaluator::BuildModel(const WecGeometry& geom) const {
  return SpectralModel(geom, hydro_->Coefficients(geom, grid_),
                       BuildDragModel(geom));
}

EvaluationRecord Evaluator::Assemble(
    const DesignVector& design, const WecGeometry& geom,
    const std::vector<SpectralResponse>& responses) const {
  EvaluationRecord rec;
  rec.design = design;
  rec.buoy_mass = geom.BuoyMass();
  const std::size_t n = climate_.size();
  rec.state_power.resize(n);
  rec.state_iterations.resize(n);
  rec.state_converged.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const SpectralResponse& r = responses[k];
    rec.state_converged[k] = r.converged;
    rec.state_iterations[k] = r.iterations;
    rec.state_power[k] = r.converged ? r.power : 0.0;
    rec.p_aap += climate_.states[k].probability * rec.state_power[k];
    const TetherForceStats t = ComputeTetherForceStats(geom, r, design.Pto(k));
    rec.peak_force = std::max(rec.peak_force, t.peak_force);
  }
  rec.anchor_mass = AnchorMass(rec.peak_force);
  rec.lcoe = LcoeProxy(rec.p_aap, rec.buoy_mass + rec.anchor_mass);
  return rec;
}

EvaluationRecord Evaluator::Evaluate(const DesignVector& design) const {
  space_.Check(design);
  const WecGeometry geom = design.Geometry(base_);
  const SpectralModel model = BuildModel(geom);
  std::vector<PtoSetting> ptos;
  std::vector<SeaState> seas;
  for (std::size_t k = 0; k < climate_.size(); ++k) {
    ptos.push_back(design.Pto(k));
    seas.push_back(climate_.states[k].sea);
  }
  return Assemble(design, geom, model.SolveBatch(ptos, seas, options_));
}

EvaluationRecord Evaluator::EvaluatePerState(const DesignVector& design) const {
  space_.Check(design);
  const WecGeometry geom = design.Geometry(base_);
  const SpectralModel model = BuildModel(geom);
  std::vector<SpectralResponse> responses;
  for (std::size_t k = 0; k < climate_.size(); ++k) {
    responses.push_back(
        model.Solve(design.Pto(k), climate_.states[k].sea, options_));
  }
  return Assemble(design, geom, responses);
}

double Evaluator::AnnualAveragePower(const DesignVector& design) const {
  return Evaluate(design).p_aap;
}

std::pair<double, double> Evaluator::SignificantMass(
    const DesignVector& design) const {
  const EvaluationRecord r = Evaluate(design);
  return {r.buoy_mass, r.anchor_mass};
}

double Evaluator::Lcoe(const DesignVector& design) const {
  return Evaluate(design).lcoe;
}

double Evaluator::Objective(std::span<const double> internal,
                            ObjectiveKind kind) const {
  return MinimisationValue(Evaluate(space_.Decode(internal)), kind);
}

}  // namespace wecopt
