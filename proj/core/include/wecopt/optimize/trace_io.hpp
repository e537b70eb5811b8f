#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wecopt/optimize/common.hpp"

namespace wecopt {

/// Shortest text that parses back to the same double; "inf", "-inf", "nan".
std::string FormatDouble(double value);

/// Trace CSV: header `evaluation_index,best_value`, 1-based index. With
/// `negate` the stored minimisation values are written with flipped sign
/// (power campaigns report watts, not -watts).
void WriteTraceCsv(std::ostream& out, const RunTrace& trace, bool negate = false);
void SaveTraceCsv(const std::filesystem::path& path, const RunTrace& trace,
                  bool negate = false);
/// best_value column, in file order. Throws ParseError.
std::vector<double> ReadTraceCsv(std::istream& in, const std::string& source = "<stream>");
std::vector<double> LoadTraceCsv(const std::filesystem::path& path);

/// Five-number summary with linearly interpolated quantiles
/// (q(p) at position p (n - 1) of the sorted sample).
struct BoxStats {
  std::size_t count = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Throws ConfigError for an empty sample.
BoxStats ComputeBoxStats(std::vector<double> values);
double Quantile(const std::vector<double>& sorted, double p);

struct RunSummary {
  std::string algorithm;
  std::string objective;
  std::uint64_t seed = 0;
  double best_value = 0.0;  // as reported (watts for power)
  std::vector<double> best_design;
  std::size_t evaluations = 0;
  double wall_seconds = 0.0;
  std::string trace_file;
  bool failed = false;
  std::string error;
};

/// One JSON document per run.
std::string RunSummaryJson(const RunSummary& run);

/// Per-algorithm campaign summary: the runs and box statistics of their
/// best values (failed runs are listed but excluded from the statistics).
std::string CampaignSummaryJson(const std::string& algorithm,
                                const std::string& objective,
                                const std::vector<RunSummary>& runs);

}  // namespace wecopt
