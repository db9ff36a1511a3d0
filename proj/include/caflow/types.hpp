#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace caflow {

using Eigen::Vector3d;
using Eigen::VectorXd;
using Eigen::MatrixXd;
using Eigen::ArrayXd;
using Eigen::ArrayXXd;

// 3x4 world-to-pixel homogeneous projection matrix.
using ProjMatrix34 = Eigen::Matrix<double, 3, 4>;

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Contract check that survives release builds. Used for preconditions that
// guard against caller errors rather than internal logic bugs.
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace caflow
