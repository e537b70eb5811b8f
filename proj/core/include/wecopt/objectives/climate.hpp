#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wecopt/hydrodyn/spectrum.hpp"

namespace wecopt {

struct ClimateEntry {
  SeaState sea;
  double probability = 0.0;
};

/// Occurrence-weighted sea states of a site. Entry order matters: PTO
/// setting k of a design belongs to entry k.
struct WaveClimate {
  std::vector<ClimateEntry> states;
  std::string site;

  /// Throws DomainError: empty, invalid sea state, negative probability,
  /// total above 1 + 1e-9, or a repeated (hs, tp) pair.
  void Validate() const;
  double TotalProbability() const;
  std::size_t size() const { return states.size(); }
};

// Climate CSV: header `hs,tp,probability`, one sea state per row, rows
// kept in file order. Blank lines are skipped; a `# site: <label>` comment
// sets the site label (default: the file stem).

/// Throws ParseError naming the offending line.
WaveClimate ReadClimate(std::istream& in, const std::string& source = "<stream>");
WaveClimate LoadClimate(const std::filesystem::path& path);
void WriteClimate(std::ostream& out, const WaveClimate& climate);

}  // namespace wecopt
