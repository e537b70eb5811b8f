#include "campaign_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wecopt/errors.hpp"

namespace wecopt::cli {
namespace {

using nlohmann::json;

void CheckKeys(const json& j, const std::set<std::string>& allowed,
               const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <typename T>
void Read(const json& j, const char* key, T& target) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config: bad value for '") + key + "'");
  }
}

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

FrequencyGrid CampaignConfig::Grid() const {
  return FrequencyGrid::Uniform(grid_min, grid_max, grid_points);
}

void CampaignConfig::Validate() const {
  if (budget == 0) throw ConfigError("budget must be > 0");
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  if (algorithms.empty()) throw ConfigError("no algorithms selected");
  if (climate.empty()) throw ConfigError("no climate file given (--climate)");
  if (!std::filesystem::exists(climate)) {
    throw ConfigError("climate file not found: " + climate.string());
  }
  if (hydro != "analytic" && !std::filesystem::exists(hydro)) {
    throw ConfigError("hydro table not found: " + hydro);
  }
  if (!(grid_min > 0.0 && grid_max > grid_min) || grid_points < 3) {
    throw ConfigError("frequency grid needs 0 < min < max and >= 3 points");
  }
  if (!(solver.tolerance > 0.0) || solver.max_iterations < 1) {
    throw ConfigError("solver needs tolerance > 0 and max_iterations >= 1");
  }
}

namespace {

CampaignConfig ParseImpl(const std::string& text,
                         const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  CheckKeys(j,
            {"objective", "algorithms", "budget", "repeats", "seed", "climate",
             "hydro", "grid", "out", "jobs", "sweep", "solver", "nelder_mead",
             "one_plus_one", "pso", "cmaes", "de", "sade", "hybrid"},
            "config");
  CampaignConfig c;
  if (j.contains("objective")) {
    c.objective = ParseObjectiveKind(j["objective"].get<std::string>());
  }
  if (j.contains("algorithms")) {
    const json& a = j["algorithms"];
    if (a.is_string()) {
      c.algorithms = ParseAlgorithmList(a.get<std::string>());
    } else {
      c.algorithms.clear();
      for (const auto& tag : a) c.algorithms.push_back(ParseAlgorithm(tag.get<std::string>()));
    }
  }
  Read(j, "budget", c.budget);
  Read(j, "repeats", c.repeats);
  Read(j, "seed", c.seed);
  Read(j, "jobs", c.jobs);
  if (j.contains("climate")) c.climate = Resolve(base_dir, j["climate"].get<std::string>());
  if (j.contains("out")) c.out = Resolve(base_dir, j["out"].get<std::string>());
  if (j.contains("hydro")) {
    const auto h = j["hydro"].get<std::string>();
    c.hydro = h == "analytic" ? h : Resolve(base_dir, h).string();
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    CheckKeys(g, {"min", "max", "points"}, "grid");
    Read(g, "min", c.grid_min);
    Read(g, "max", c.grid_max);
    Read(g, "points", c.grid_points);
  }
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    CheckKeys(s, {"radii", "aspects"}, "sweep");
    Read(s, "radii", c.radii);
    Read(s, "aspects", c.aspects);
  }
  if (j.contains("solver")) {
    const json& s = j["solver"];
    CheckKeys(s, {"tolerance", "max_iterations", "update"}, "solver");
    Read(s, "tolerance", c.solver.tolerance);
    Read(s, "max_iterations", c.solver.max_iterations);
    if (s.contains("update")) {
      const auto u = s["update"].get<std::string>();
      if (u == "secant") {
        c.solver.update = LinearisationUpdate::kSecant;
      } else if (u == "direct") {
        c.solver.update = LinearisationUpdate::kDirect;
      } else {
        throw ConfigError("solver.update must be 'secant' or 'direct'");
      }
    }
  }
  OptimiserConfig& o = c.optimiser;
  if (j.contains("nelder_mead")) {
    const json& s = j["nelder_mead"];
    CheckKeys(s, {"reflection", "expansion", "contraction", "shrink"}, "nelder_mead");
    Read(s, "reflection", o.nelder_mead.reflection);
    Read(s, "expansion", o.nelder_mead.expansion);
    Read(s, "contraction", o.nelder_mead.contraction);
    Read(s, "shrink", o.nelder_mead.shrink);
  }
  if (j.contains("one_plus_one")) {
    const json& s = j["one_plus_one"];
    CheckKeys(s, {"sigma_fraction"}, "one_plus_one");
    Read(s, "sigma_fraction", o.one_plus_one.sigma_fraction);
  }
  if (j.contains("pso")) {
    const json& s = j["pso"];
    CheckKeys(s, {"swarm_size", "cognitive", "social", "inertia", "inertia_damping",
                  "initial_velocity_fraction"}, "pso");
    Read(s, "swarm_size", o.pso.swarm_size);
    Read(s, "cognitive", o.pso.cognitive);
    Read(s, "social", o.pso.social);
    Read(s, "inertia", o.pso.inertia);
    Read(s, "inertia_damping", o.pso.inertia_damping);
    Read(s, "initial_velocity_fraction", o.pso.initial_velocity_fraction);
  }
  if (j.contains("cmaes")) {
    const json& s = j["cmaes"];
    CheckKeys(s, {"population", "initial_step_fraction", "resample_attempts"}, "cmaes");
    Read(s, "population", o.cmaes.population);
    Read(s, "initial_step_fraction", o.cmaes.initial_step_fraction);
    Read(s, "resample_attempts", o.cmaes.resample_attempts);
  }
  if (j.contains("de")) {
    const json& s = j["de"];
    CheckKeys(s, {"population", "weight", "crossover"}, "de");
    Read(s, "population", o.de.population);
    Read(s, "weight", o.de.weight);
    Read(s, "crossover", o.de.crossover);
  }
  if (j.contains("sade")) {
    const json& s = j["sade"];
    CheckKeys(s, {"population", "learning_period", "probability_floor", "weight_mean",
                  "weight_sd", "crossover_init", "crossover_sd"}, "sade");
    Read(s, "population", o.sade.population);
    Read(s, "learning_period", o.sade.learning_period);
    Read(s, "probability_floor", o.sade.probability_floor);
    Read(s, "weight_mean", o.sade.weight_mean);
    Read(s, "weight_sd", o.sade.weight_sd);
    Read(s, "crossover_init", o.sade.crossover_init);
    Read(s, "crossover_sd", o.sade.crossover_sd);
  }
  if (j.contains("hybrid")) {
    const json& s = j["hybrid"];
    CheckKeys(s, {"de_budget", "nm_budget"}, "hybrid");
    Read(s, "de_budget", o.hybrid.de_budget);
    Read(s, "nm_budget", o.hybrid.nm_budget);
  }
  return c;
}

}  // namespace

CampaignConfig ParseCampaignConfig(const std::string& text,
                                   const std::filesystem::path& base_dir) {
  try {
    return ParseImpl(text, base_dir);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

CampaignConfig LoadCampaignConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseCampaignConfig(text.str(), path.parent_path());
}

std::vector<Algorithm> ParseAlgorithmList(const std::string& text) {
  if (text == "all" || text == "ALL") return StandardAlgorithms();
  std::vector<Algorithm> out;
  std::stringstream ss(text);
  for (std::string tag; std::getline(ss, tag, ',');) {
    if (!tag.empty()) out.push_back(ParseAlgorithm(tag));
  }
  if (out.empty()) throw ConfigError("empty algorithm list");
  return out;
}

std::vector<double> ParseNumberList(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw ConfigError("not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty number list");
  return out;
}

}  // namespace wecopt::cli
