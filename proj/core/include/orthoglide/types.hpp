#pragma once

#include <Eigen/Core>

#include <array>
#include <limits>

namespace orthoglide {

/// Three-component value tagged with its physical meaning so tool-space and
/// joint-space quantities cannot be mixed up. All lengths are millimetres,
/// speeds mm/s, accelerations mm/s^2.
template <class Tag>
struct Vec3 {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();

  Vec3() = default;
  Vec3(double a, double b, double c) : v(a, b, c) {}
  explicit Vec3(const Eigen::Vector3d& e) : v(e) {}

  double operator[](int i) const { return v[i]; }
  double& operator[](int i) { return v[i]; }

  friend bool operator==(const Vec3& a, const Vec3& b) { return a.v == b.v; }
};

struct ToolPoseTag {};
struct JointVectorTag {};
struct ToolVelocityTag {};
struct JointVelocityTag {};

/// Tool point P in the frame whose axes are the three slider directions.
using ToolPose = Vec3<ToolPoseTag>;
/// Signed slider coordinates along x, y, z.
using JointVector = Vec3<JointVectorTag>;
using ToolVelocity = Vec3<ToolVelocityTag>;
using JointVelocity = Vec3<JointVelocityTag>;

struct Tolerances {
  /// A leg is serially singular when eta_i <= serial * L.
  double serial = 1e-9;
  /// Allowed leg-closure residual, relative to L, for (p, rho) pairs.
  double closure = 1e-6;
  /// |det(J^-1)| at or below this flags a parallel singularity.
  double parallel = 1e-9;
  /// Slack on stroke limits, relative to L, absorbing rounding at the limits.
  double stroke = 1e-9;
};

/// Complete geometric identity of a machine plus its motor capability.
struct DesignParams {
  double leg_length = 0.0;
  std::array<double, 3> stroke_min{-std::numeric_limits<double>::infinity(),
                                   -std::numeric_limits<double>::infinity(),
                                   -std::numeric_limits<double>::infinity()};
  std::array<double, 3> stroke_max{std::numeric_limits<double>::infinity(),
                                   std::numeric_limits<double>::infinity(),
                                   std::numeric_limits<double>::infinity()};
  double motor_vmax = 1200.0;   // mm/s
  double motor_amax = 20000.0;  // mm/s^2
  Tolerances tol{};

  /// Throws Error(InvalidArgument) when an invariant is broken.
  void validate() const;

  /// Unbounded strokes, default motors.
  static DesignParams with_leg_length(double leg_length);

  bool within_stroke(const JointVector& rho) const;
};

}  // namespace orthoglide
