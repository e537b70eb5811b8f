#include "wecopt/hydrodyn/hydro_table.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "wecopt/errors.hpp"

namespace wecopt {
namespace {

constexpr double kSymmetryTol = 1e-6;

class LineReader {
 public:
  LineReader(std::istream& in, const std::string& source)
      : in_(in), source_(source) {}

  // Next non-comment, non-blank line split into tokens; false at EOF.
  bool Next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      tokens.clear();
      std::istringstream ss(line);
      for (std::string t; ss >> t;) tokens.push_back(t);
      return true;
    }
    return false;
  }

  std::vector<double> Numbers(std::size_t expected, const char* what) {
    std::vector<std::string> tokens;
    if (!Next(tokens)) Fail(std::string("unexpected end of file, expected ") + what);
    if (tokens.size() != expected) {
      Fail(std::string("expected ") + std::to_string(expected) +
           " values for " + what + ", got " + std::to_string(tokens.size()));
    }
    std::vector<double> values;
    values.reserve(expected);
    for (const auto& t : tokens) values.push_back(ToDouble(t));
    return values;
  }

  double ToDouble(const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      Fail("not a number: '" + token + "'");
    }
    if (used != token.size() || !std::isfinite(v)) {
      Fail("not a finite number: '" + token + "'");
    }
    return v;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(source_, line_no_, message);
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

Matrix6d ReadMatrix(LineReader& reader, const char* what) {
  Matrix6d m;
  for (int r = 0; r < 6; ++r) {
    const auto row = reader.Numbers(6, what);
    for (int c = 0; c < 6; ++c) m(r, c) = row[c];
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
    reader.Fail(std::string(what) + " matrix is not symmetric");
  }
  return m;
}

}  // namespace

HydroCoefficients ReadHydroTable(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<double> omegas;
  HydroCoefficients out;

  std::vector<std::string> tokens;
  while (reader.Next(tokens)) {
    if (tokens.size() != 2 || tokens[0] != "omega") {
      reader.Fail("expected 'omega <value>'");
    }
    const double w = reader.ToDouble(tokens[1]);
    if (!(w > 0.0)) reader.Fail("frequency must be > 0");
    if (!omegas.empty() && w <= omegas.back()) {
      reader.Fail("frequency column is not strictly increasing");
    }
    omegas.push_back(w);
    out.added_mass.push_back(ReadMatrix(reader, "added mass"));
    Matrix6d b = ReadMatrix(reader, "radiation damping");
    if ((b.diagonal().array() < 0.0).any()) {
      reader.Fail("radiation damping has a negative diagonal entry");
    }
    out.radiation_damping.push_back(b);
    Vector6cd f;
    for (int r = 0; r < 6; ++r) {
      const auto pair = reader.Numbers(2, "excitation");
      f(r) = Complex(pair[0], pair[1]);
    }
    out.excitation.push_back(f);
  }
  if (omegas.size() < 2) {
    throw ParseError(source, 0, "hydro table needs at least two frequencies");
  }
  out.grid = FrequencyGrid(std::move(omegas));
  return out;
}

HydroCoefficients LoadHydroTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return ReadHydroTable(in, path.string());
}

void WriteHydroTable(std::ostream& out, const HydroCoefficients& hydro) {
  hydro.Validate();
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "# wecopt hydro table: omega, 6x6 added mass, 6x6 radiation damping,"
         " 6 x (re im) excitation\n";
  for (std::size_t i = 0; i < hydro.grid.size(); ++i) {
    out << "omega " << hydro.grid[i] << "\n";
    for (const Matrix6d* m : {&hydro.added_mass[i], &hydro.radiation_damping[i]}) {
      for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) out << (c ? " " : "") << (*m)(r, c);
        out << "\n";
      }
    }
    for (int r = 0; r < 6; ++r) {
      out << hydro.excitation[i](r).real() << " " << hydro.excitation[i](r).imag()
          << "\n";
    }
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

void SaveHydroTable(const std::filesystem::path& path,
                    const HydroCoefficients& hydro) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  WriteHydroTable(out, hydro);
}

}  // namespace wecopt
