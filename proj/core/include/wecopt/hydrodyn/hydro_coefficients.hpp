#pragma once

#include <vector>

#include "wecopt/hydrodyn/frequency_grid.hpp"
#include "wecopt/linalg.hpp"

namespace wecopt {

/// Frequency-tabulated linear hydrodynamics of the buoy: added mass A(w),
/// radiation damping B(w), and the complex excitation force per unit wave
/// amplitude. Entry i of each vector belongs to grid[i].
struct HydroCoefficients {
  FrequencyGrid grid = FrequencyGrid::Default();
  std::vector<Matrix6d> added_mass;
  std::vector<Matrix6d> radiation_damping;
  std::vector<Vector6cd> excitation;

  struct Sample {
    Matrix6d added_mass;
    Matrix6d radiation_damping;
    Vector6cd excitation;
  };

  /// Checks sizes, finiteness, symmetry of A and B (relative tolerance
  /// `symmetry_tol`) and B_ii >= 0. Throws DomainError.
  void Validate(double symmetry_tol = 1e-6) const;

  /// Linear interpolation between grid nodes; frequencies outside the grid
  /// clamp to the end nodes.
  Sample At(double omega) const;

  /// The coefficients interpolated onto another grid.
  HydroCoefficients Resample(const FrequencyGrid& target) const;
};

}  // namespace wecopt
