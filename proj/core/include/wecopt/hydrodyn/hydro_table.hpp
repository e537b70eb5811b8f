#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "wecopt/hydrodyn/hydro_coefficients.hpp"

namespace wecopt {

// Plain-text hydro table. Lines starting with '#' and blank lines are
// ignored. One block per frequency, in increasing order:
//
//   omega <value>
//   6 rows x 6 columns   added mass
//   6 rows x 6 columns   radiation damping
//   6 rows "re im"       excitation per unit amplitude
//
// Whitespace separated, SI units.

/// Throws ParseError (naming the line) on malformed rows, a non-increasing
/// frequency column, or A/B asymmetric beyond 1e-6 relative.
HydroCoefficients ReadHydroTable(std::istream& in,
                                 const std::string& source = "<stream>");
HydroCoefficients LoadHydroTable(const std::filesystem::path& path);

/// Writes with round-trip precision.
void WriteHydroTable(std::ostream& out, const HydroCoefficients& hydro);
void SaveHydroTable(const std::filesystem::path& path,
                    const HydroCoefficients& hydro);

}  // namespace wecopt
