#include "wecopt/objectives/climate.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "wecopt/errors.hpp"

namespace wecopt {
namespace {

constexpr double kProbabilitySlack = 1e-9;

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

double WaveClimate::TotalProbability() const {
  double sum = 0.0;
  for (const auto& e : states) sum += e.probability;
  return sum;
}

void WaveClimate::Validate() const {
  if (states.empty()) throw DomainError("wave climate has no sea states");
  for (std::size_t i = 0; i < states.size(); ++i) {
    states[i].sea.Validate();
    if (!(states[i].probability >= 0.0) ||
        !std::isfinite(states[i].probability)) {
      throw DomainError("sea state " + std::to_string(i) +
                        " has a negative probability");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (states[j].sea == states[i].sea) {
        throw DomainError("sea state " + std::to_string(i) +
                          " duplicates state " + std::to_string(j));
      }
    }
  }
  if (TotalProbability() > 1.0 + kProbabilitySlack) {
    throw DomainError("climate probabilities sum above 1");
  }
}

WaveClimate ReadClimate(std::istream& in, const std::string& source) {
  WaveClimate climate;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  double total = 0.0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = Trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = Trim(t.substr(1));
      if (body.rfind("site:", 0) == 0) climate.site = Trim(body.substr(5));
      continue;
    }
    if (!header_seen) {
      std::string compact;
      for (char c : t) {
        if (c != ' ' && c != '\t') compact += c;
      }
      if (compact != "hs,tp,probability") {
        throw ParseError(source, line_no,
                         "expected header 'hs,tp,probability'");
      }
      header_seen = true;
      continue;
    }
    std::vector<double> values;
    std::stringstream row(t);
    for (std::string cell; std::getline(row, cell, ',');) {
      cell = Trim(cell);
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw ParseError(source, line_no, "not a number: '" + cell + "'");
      }
      if (used != cell.size() || !std::isfinite(v)) {
        throw ParseError(source, line_no, "not a finite number: '" + cell + "'");
      }
      values.push_back(v);
    }
    if (values.size() != 3) {
      throw ParseError(source, line_no, "expected 3 columns (hs,tp,probability)");
    }
    ClimateEntry entry{{values[0], values[1]}, values[2]};
    if (!(entry.sea.hs > 0.0) || !(entry.sea.tp > 0.0)) {
      throw ParseError(source, line_no, "hs and tp must be > 0");
    }
    if (entry.probability < 0.0) {
      throw ParseError(source, line_no, "negative probability");
    }
    for (const auto& prev : climate.states) {
      if (prev.sea == entry.sea) {
        throw ParseError(source, line_no, "duplicate (hs, tp) pair");
      }
    }
    total += entry.probability;
    if (total > 1.0 + kProbabilitySlack) {
      throw ParseError(source, line_no, "probabilities sum above 1");
    }
    climate.states.push_back(entry);
  }
  if (!header_seen) throw ParseError(source, 0, "missing header");
  if (climate.states.empty()) throw ParseError(source, 0, "no sea states");
  return climate;
}

WaveClimate LoadClimate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  WaveClimate climate = ReadClimate(in, path.string());
  if (climate.site.empty()) climate.site = path.stem().string();
  return climate;
}

void WriteClimate(std::ostream& out, const WaveClimate& climate) {
  const auto old_precision = out.precision();
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  if (!climate.site.empty()) out << "# site: " << climate.site << "\n";
  out << "hs,tp,probability\n";
  for (const auto& e : climate.states) {
    out << e.sea.hs << "," << e.sea.tp << "," << e.probability << "\n";
  }
  out.precision(old_precision);
}

}  // namespace wecopt
