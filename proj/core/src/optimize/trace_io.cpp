#include "wecopt/optimize/trace_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wecopt/errors.hpp"

namespace wecopt {
namespace {

nlohmann::ordered_json Number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

nlohmann::ordered_json StatsJson(const BoxStats& s) {
  nlohmann::ordered_json j;
  j["count"] = s.count;
  j["min"] = Number(s.min);
  j["q1"] = Number(s.q1);
  j["median"] = Number(s.median);
  j["q3"] = Number(s.q3);
  j["max"] = Number(s.max);
  return j;
}

nlohmann::ordered_json RunJson(const RunSummary& run) {
  nlohmann::ordered_json j;
  j["algorithm"] = run.algorithm;
  j["objective"] = run.objective;
  j["seed"] = run.seed;
  j["failed"] = run.failed;
  if (run.failed) j["error"] = run.error;
  j["best_value"] = Number(run.best_value);
  j["best_design"] = run.best_design;
  j["evaluations"] = run.evaluations;
  j["wall_seconds"] = run.wall_seconds;
  j["trace_file"] = run.trace_file;
  return j;
}

double ParseDouble(const std::string& text, const std::string& source, int line) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(source, line, "not a number: '" + text + "'");
  }
  return v;
}

}  // namespace

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

void WriteTraceCsv(std::ostream& out, const RunTrace& trace, bool negate) {
  out << "evaluation_index,best_value\n";
  for (std::size_t i = 0; i < trace.best_so_far.size(); ++i) {
    const double v = trace.best_so_far[i];
    out << i + 1 << ',' << FormatDouble(negate ? -v : v) << '\n';
  }
}

void SaveTraceCsv(const std::filesystem::path& path, const RunTrace& trace,
                  bool negate) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  WriteTraceCsv(out, trace, negate);
  if (!out) throw ConfigError("write failed: " + path.string());
}

std::vector<double> ReadTraceCsv(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line) || line != "evaluation_index,best_value") {
    throw ParseError(source, 1, "expected header 'evaluation_index,best_value'");
  }
  std::vector<double> values;
  for (int n = 2; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError(source, n, "expected 2 columns");
    }
    const double index = ParseDouble(line.substr(0, comma), source, n);
    if (index != static_cast<double>(values.size() + 1)) {
      throw ParseError(source, n, "evaluation index out of sequence");
    }
    values.push_back(ParseDouble(line.substr(comma + 1), source, n));
  }
  return values;
}

std::vector<double> LoadTraceCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return ReadTraceCsv(in, path.string());
}

double Quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw ConfigError("quantile of an empty sample");
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double t = h - static_cast<double>(lo);
  if (t == 0.0) return sorted[lo];
  return sorted[lo] + t * (sorted[hi] - sorted[lo]);
}

BoxStats ComputeBoxStats(std::vector<double> values) {
  if (values.empty()) throw ConfigError("box statistics of an empty sample");
  std::sort(values.begin(), values.end());
  BoxStats s;
  s.count = values.size();
  s.min = values.front();
  s.q1 = Quantile(values, 0.25);
  s.median = Quantile(values, 0.5);
  s.q3 = Quantile(values, 0.75);
  s.max = values.back();
  return s;
}

std::string RunSummaryJson(const RunSummary& run) {
  return RunJson(run).dump(2) + "\n";
}

std::string CampaignSummaryJson(const std::string& algorithm,
                                const std::string& objective,
                                const std::vector<RunSummary>& runs) {
  nlohmann::ordered_json j;
  j["algorithm"] = algorithm;
  j["objective"] = objective;
  j["repeats"] = runs.size();
  std::vector<double> best;
  std::size_t failed = 0;
  auto list = nlohmann::ordered_json::array();
  for (const auto& r : runs) {
    list.push_back(RunJson(r));
    if (r.failed) {
      ++failed;
    } else {
      best.push_back(r.best_value);
    }
  }
  j["failed_runs"] = failed;
  j["stats"] = best.empty() ? nlohmann::ordered_json(nullptr)
                            : StatsJson(ComputeBoxStats(best));
  j["runs"] = std::move(list);
  return j.dump(2) + "\n";
}

}  // namespace wecopt
