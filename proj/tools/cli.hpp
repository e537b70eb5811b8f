#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "campaign_config.hpp"
#include "wecopt/optimize/common.hpp"

namespace wecopt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPartialFailure = 1;
inline constexpr int kExitInvalidInput = 2;

/// Entry point behind the `wecopt` binary.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct CampaignRun {
  Algorithm algorithm = Algorithm::kDe;
  std::uint64_t seed = 0;
  RunTrace trace;
  bool failed = false;
  std::string error;
};

/// Every (algorithm, repeat) pair with seeds seed + 0 .. seed + repeats - 1,
/// on up to `jobs` threads. A throwing run is recorded as failed and the
/// others continue. Results are ordered algorithm-major.
std::vector<CampaignRun> RunCampaign(const std::vector<Algorithm>& algorithms,
                                     int repeats, std::uint64_t seed,
                                     const OptimiserConfig& base,
                                     const Objective& objective,
                                     const Bounds& bounds, int jobs);

/// File stem shared by a run's trace and summary.
std::string RunStem(ObjectiveKind kind, Algorithm algorithm, std::uint64_t seed);

}  // namespace wecopt::cli
