#pragma once

#include <complex>

#include <Eigen/Dense>

namespace wecopt {

using Complex = std::complex<double>;
using Vector3d = Eigen::Vector3d;
using Vector6d = Eigen::Matrix<double, 6, 1>;
using Vector6cd = Eigen::Matrix<Complex, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Matrix6cd = Eigen::Matrix<Complex, 6, 6>;
using Matrix3d = Eigen::Matrix3d;
using Matrix36d = Eigen::Matrix<double, 3, 6>;

/// Degree-of-freedom indices, surge..yaw.
enum Dof : int { kSurge = 0, kSway, kHeave, kRoll, kPitch, kYaw };

}  // namespace wecopt
