#pragma once

// Velocity-transmission metrics derived from the inverse Jacobian.
//
// Conventions:
//  * Transmission factors are the singular values of the forward map J (joint
//    speed -> tool speed), i.e. the reciprocals of the singular values of J^-1.
//    They are reported in ascending order.
//  * The condition number follows the small/large convention and lies in
//    [0, 1]: 1 at an isotropic pose, 0 at a singularity. It is the reciprocal
//    of the usual large/small textbook value.
//  * Only velocity quantities are computed. Force transmission is the dual
//    (the force ellipsoid has reciprocal semi-axes along the same directions).

#include "orthoglide/kinematics.hpp"
#include "orthoglide/types.hpp"

#include <Eigen/Core>

#include <array>

namespace orthoglide {

/// Singular decomposition of a 3x3 matrix, values in descending order.
struct Svd3 {
  Eigen::Vector3d values;
  Eigen::Matrix3d u;  // left singular vectors (columns)
  Eigen::Matrix3d v;  // right singular vectors (columns)
};

/// One-sided cyclic Jacobi: plane rotations applied to the columns of m until
/// m^T m is diagonal. Converges to full relative accuracy for 3x3 inputs.
Svd3 svd3(const Eigen::Matrix3d& m);

struct TransmissionReport {
  /// Ascending; +infinity where J^-1 loses rank.
  std::array<double, 3> sigma_fwd{};
  double kappa = 0.0;
  double det_inv = 0.0;
  /// Leg i flagged when eta_i / L = 1 / |row_i(J^-1)| is at or below tol.serial.
  std::array<bool, 3> serial_flags{};
  bool parallel_flag = false;

  bool singular() const;
};

TransmissionReport transmission_factors(const InverseJacobian& jinv, const Tolerances& tol = {});

/// sigma_min / sigma_max of J^-1 (same value for J).
double condition_number(const InverseJacobian& jinv);

struct IsotropyResidual {
  /// max_i | |c_i - b_i| / eta_i - 1 |: unit transmission along each slider.
  double ratio_dev = 0.0;
  /// max_i - min_i of |c_i - b_i| / eta_i: equal ratios on all legs.
  double ratio_spread = 0.0;
  /// max_{i<j} |cos| of the angle between leg vectors c_i - b_i and c_j - b_j.
  double ortho_dev = 0.0;

  bool isotropic(double tol = 1e-9) const { return ratio_dev <= tol && ortho_dev <= tol; }
};

IsotropyResidual isotropy_residual(const ToolPose& p, const DesignParams& d);

struct Ellipsoid {
  /// Equal to TransmissionReport::sigma_fwd (ascending).
  std::array<double, 3> semi_axes{};
  /// Column k is the tool-space direction of semi_axes[k].
  Eigen::Matrix3d directions = Eigen::Matrix3d::Identity();
};

/// Image of the unit joint-speed sphere under J. Throws ParallelSingularity.
Ellipsoid manipulability_ellipsoid(const InverseJacobian& jinv, const Tolerances& tol = {});

}  // namespace orthoglide
