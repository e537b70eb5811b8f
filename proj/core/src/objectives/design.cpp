#include "wecopt/objectives/design.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "wecopt/errors.hpp"

namespace wecopt {
namespace {

// Tolerates the rounding of 10^x at the PTO bounds.
bool Within(double v, const ParameterRange& r) {
  const double slack = 1e-12 * std::max(std::abs(r.lo), std::abs(r.hi));
  return std::isfinite(v) && v >= r.lo - slack && v <= r.hi + slack;
}

std::string Describe(const std::string& name, double v, const ParameterRange& r) {
  std::ostringstream os;
  os << name << " = " << v << " outside [" << r.lo << ", " << r.hi << "]";
  return os.str();
}

}  // namespace

WecGeometry DesignVector::Geometry(const WecGeometry& base) const {
  WecGeometry g = base;
  g.radius = radius;
  g.height = aspect_ratio * radius;
  g.tether_inclination_deg = tether_inclination_deg;
  g.attachment_angle_deg = attachment_angle_deg;
  return g;
}

PtoSetting DesignVector::Pto(std::size_t state) const {
  return {stiffness.at(state), damping.at(state)};
}

std::vector<double> DesignVector::Flatten() const {
  std::vector<double> v{radius, aspect_ratio, tether_inclination_deg,
                        attachment_angle_deg};
  v.insert(v.end(), stiffness.begin(), stiffness.end());
  v.insert(v.end(), damping.begin(), damping.end());
  return v;
}

DesignVector DesignVector::FromFlat(std::span<const double> values) {
  if (values.size() < 6 || (values.size() - 4) % 2 != 0) {
    throw DomainError("design vector needs 4 + 2N values with N >= 1, got " +
                      std::to_string(values.size()));
  }
  const std::size_t n = (values.size() - 4) / 2;
  DesignVector d;
  d.radius = values[0];
  d.aspect_ratio = values[1];
  d.tether_inclination_deg = values[2];
  d.attachment_angle_deg = values[3];
  d.stiffness.assign(values.begin() + 4, values.begin() + 4 + n);
  d.damping.assign(values.begin() + 4 + n, values.end());
  return d;
}

DesignSpace::DesignSpace(std::size_t n_states) : n_states_(n_states) {
  if (n_states == 0) throw DomainError("design space needs at least one state");
  lower_ = {kRadiusRange.lo, kAspectRange.lo, kTetherAngleRange.lo,
            kAttachAngleRange.lo};
  upper_ = {kRadiusRange.hi, kAspectRange.hi, kTetherAngleRange.hi,
            kAttachAngleRange.hi};
  lower_.resize(dimension(), std::log10(kPtoRange.lo));
  upper_.resize(dimension(), std::log10(kPtoRange.hi));
}

std::vector<double> DesignSpace::Encode(const DesignVector& design) const {
  if (design.stiffness.size() != n_states_ || design.damping.size() != n_states_) {
    throw DomainError("design has " + std::to_string(design.size()) +
                      " parameters, expected " + std::to_string(dimension()));
  }
  std::vector<double> x = design.Flatten();
  for (std::size_t i = 4; i < x.size(); ++i) x[i] = std::log10(x[i]);
  return x;
}

DesignVector DesignSpace::Decode(std::span<const double> internal) const {
  if (internal.size() != dimension()) {
    throw DomainError("internal vector has " + std::to_string(internal.size()) +
                      " entries, expected " + std::to_string(dimension()));
  }
  std::vector<double> v(internal.begin(), internal.end());
  for (std::size_t i = 4; i < v.size(); ++i) v[i] = std::pow(10.0, v[i]);
  return DesignVector::FromFlat(v);
}

bool DesignSpace::Contains(const DesignVector& design) const {
  try {
    Check(design);
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

void DesignSpace::Check(const DesignVector& design) const {
  if (design.stiffness.size() != n_states_ || design.damping.size() != n_states_) {
    throw DomainError("design has " + std::to_string(design.size()) +
                      " parameters, expected " + std::to_string(dimension()));
  }
  if (!Within(design.radius, kRadiusRange)) {
    throw DomainError(Describe("radius", design.radius, kRadiusRange));
  }
  if (!Within(design.aspect_ratio, kAspectRange)) {
    throw DomainError(Describe("aspect ratio", design.aspect_ratio, kAspectRange));
  }
  if (!Within(design.tether_inclination_deg, kTetherAngleRange)) {
    throw DomainError(Describe("tether inclination",
                               design.tether_inclination_deg, kTetherAngleRange));
  }
  if (!Within(design.attachment_angle_deg, kAttachAngleRange)) {
    throw DomainError(Describe("attachment angle", design.attachment_angle_deg,
                               kAttachAngleRange));
  }
  for (std::size_t k = 0; k < n_states_; ++k) {
    if (!Within(design.stiffness[k], kPtoRange)) {
      throw DomainError(Describe("stiffness[" + std::to_string(k) + "]",
                                 design.stiffness[k], kPtoRange));
    }
    if (!Within(design.damping[k], kPtoRange)) {
      throw DomainError(Describe("damping[" + std::to_string(k) + "]",
                                 design.damping[k], kPtoRange));
    }
  }
}

DesignVector ReadDesign(std::istream& in, const std::string& source) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ss(line);
    for (std::string token; ss >> token;) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        throw ParseError(source, line_no, "not a number: '" + token + "'");
      }
      if (used != token.size() || !std::isfinite(v)) {
        throw ParseError(source, line_no, "not a finite number: '" + token + "'");
      }
      values.push_back(v);
    }
  }
  try {
    return DesignVector::FromFlat(values);
  } catch (const DomainError& e) {
    throw ParseError(source, 0, e.what());
  }
}

DesignVector LoadDesign(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return ReadDesign(in, path.string());
}

void WriteDesign(std::ostream& out, const DesignVector& design) {
  const auto old_precision = out.precision();
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << "# a H/a alpha_t alpha_ap\n"
      << design.radius << " " << design.aspect_ratio << " "
      << design.tether_inclination_deg << " " << design.attachment_angle_deg
      << "\n# stiffness per sea state [N/m]\n";
  for (std::size_t k = 0; k < design.stiffness.size(); ++k) {
    out << (k ? " " : "") << design.stiffness[k];
  }
  out << "\n# damping per sea state [N s/m]\n";
  for (std::size_t k = 0; k < design.damping.size(); ++k) {
    out << (k ? " " : "") << design.damping[k];
  }
  out << "\n";
  out.precision(old_precision);
}

}  // namespace wecopt
