#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wecopt/dynamics/geometry.hpp"
#include "wecopt/dynamics/kinematics.hpp"

namespace wecopt {

struct ParameterRange {
  double lo;
  double hi;
};

// Admissible design ranges.
inline constexpr ParameterRange kRadiusRange{5.0, 20.0};          // m
inline constexpr ParameterRange kAspectRange{0.4, 1.5};           // H/a
inline constexpr ParameterRange kTetherAngleRange{10.0, 80.0};    // deg
inline constexpr ParameterRange kAttachAngleRange{10.0, 80.0};    // deg
inline constexpr ParameterRange kPtoRange{1.0e3, 1.0e8};          // N/m, N s/m

/// Design under optimisation: hull, tether angles, and one PTO setting per
/// climate sea state. 4 + 2N parameters.
struct DesignVector {
  double radius = 5.5;
  double aspect_ratio = 1.0;
  double tether_inclination_deg = 45.0;
  double attachment_angle_deg = 45.0;
  std::vector<double> stiffness;  // [N/m], one per sea state
  std::vector<double> damping;    // [N s/m], one per sea state

  std::size_t states() const { return stiffness.size(); }
  std::size_t size() const { return 4 + stiffness.size() + damping.size(); }

  /// Hull and tether angles on top of `base` (submergence, depth, density).
  WecGeometry Geometry(const WecGeometry& base = {}) const;
  PtoSetting Pto(std::size_t state) const;

  /// Physical values in file order: a, H/a, alpha_t, alpha_ap, k..., b...
  std::vector<double> Flatten() const;
  /// Inverse of Flatten. Throws DomainError for an odd or too short input.
  static DesignVector FromFlat(std::span<const double> values);

  bool operator==(const DesignVector&) const = default;
};

/// Search space for N sea states. Optimisers work on the internal
/// coordinates: hull and angle entries as-is, PTO entries as log10 of the
/// physical value (so the PTO box is [3, 8]).
class DesignSpace {
 public:
  explicit DesignSpace(std::size_t n_states);

  std::size_t dimension() const { return 4 + 2 * n_states_; }
  std::size_t states() const { return n_states_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }

  /// Throws DomainError on a state-count mismatch.
  std::vector<double> Encode(const DesignVector& design) const;
  /// Throws DomainError on a length mismatch.
  DesignVector Decode(std::span<const double> internal) const;

  bool Contains(const DesignVector& design) const;
  /// Throws DomainError naming the first parameter outside its range.
  void Check(const DesignVector& design) const;

 private:
  std::size_t n_states_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

// Design files: whitespace-separated physical values in Flatten() order;
// '#' starts a comment.
DesignVector ReadDesign(std::istream& in, const std::string& source = "<stream>");
DesignVector LoadDesign(const std::filesystem::path& path);
void WriteDesign(std::ostream& out, const DesignVector& design);

}  // namespace wecopt
