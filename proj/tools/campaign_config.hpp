#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wecopt/dynamics/spectral_solver.hpp"
#include "wecopt/hydrodyn/frequency_grid.hpp"
#include "wecopt/objectives/evaluation.hpp"
#include "wecopt/optimize/common.hpp"

namespace wecopt::cli {

// Everything a CLI command needs. Loaded from a JSON file, then overridden
// by flags. Relative paths in the file are resolved against its directory.
struct CampaignConfig {
  ObjectiveKind objective = ObjectiveKind::kPower;
  std::vector<Algorithm> algorithms = StandardAlgorithms();
  std::size_t budget = 5000;
  int repeats = 10;
  std::uint64_t seed = 0;
  std::filesystem::path climate;
  std::string hydro = "analytic";
  double grid_min = 0.1;
  double grid_max = 3.0;
  std::size_t grid_points = 60;
  std::filesystem::path out = "out";
  int jobs = 1;
  std::vector<double> radii;
  std::vector<double> aspects;
  OptimiserConfig optimiser;
  SolverOptions solver;

  FrequencyGrid Grid() const;
  /// Throws ConfigError: missing climate, bad budget, unknown paths...
  void Validate() const;
};

/// Throws ConfigError for unreadable files, bad JSON or unknown keys.
CampaignConfig LoadCampaignConfig(const std::filesystem::path& path);
CampaignConfig ParseCampaignConfig(const std::string& json,
                                   const std::filesystem::path& base_dir);

/// Comma-separated list, e.g. "DE,PSO" or "all".
std::vector<Algorithm> ParseAlgorithmList(const std::string& text);
/// Comma-separated numbers.
std::vector<double> ParseNumberList(const std::string& text);

}  // namespace wecopt::cli
