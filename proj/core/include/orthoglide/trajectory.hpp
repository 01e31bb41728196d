#pragma once

#include "orthoglide/kinematics.hpp"
#include "orthoglide/types.hpp"

#include <Eigen/Core>

#include <array>
#include <span>
#include <vector>

namespace orthoglide {

/// rho_dot = J^-1(p) p_dot.
JointVelocity joint_velocity(const ToolPose& p, const ToolVelocity& v, const DesignParams& d);

/// How the motor speed limit applies to the joint-velocity vector.
enum class JointSpeedNorm {
  /// |rho_dot|_2 <= vmax. In the worst direction this gives vmax / sigma_max(J^-1).
  Euclidean,
  /// max_i |rho_dot_i| <= vmax, i.e. every motor individually.
  PerJoint,
};

/// Largest tool speed along the unit vector `dir` that keeps the joint speed
/// within motor_vmax under the chosen norm.
double max_feasible_tool_speed(const ToolPose& p, const Eigen::Vector3d& dir,
                               const DesignParams& d,
                               JointSpeedNorm norm = JointSpeedNorm::Euclidean);

struct Waypoint {
  double t = 0.0;  // s
  ToolPose pose;
};

struct PathSample {
  double t = 0.0;
  ToolPose pose;
  JointVector joints;
  JointVelocity joint_vel;
  Eigen::Vector3d joint_acc = Eigen::Vector3d::Zero();
  std::array<bool, 3> vel_flag{};  // |rho_dot_i| > motor_vmax
  std::array<bool, 3> acc_flag{};  // |rho_ddot_i| > motor_amax
};

struct PathProfile {
  std::vector<PathSample> samples;

  bool any_velocity_flag() const;
  bool any_acceleration_flag() const;
};

/// Joint positions by IK at every waypoint; velocities and accelerations by
/// finite differences in time (three-point central stencils inside, one-sided
/// second-order stencils at the ends; non-uniform spacing supported).
/// Throws Unreachable/SerialSingularity with the waypoint index, or
/// NonMonotoneTime.
PathProfile profile_path(std::span<const Waypoint> waypoints, const DesignParams& d);

/// Finite-difference weights for derivative `order` at x0 over the nodes xs.
std::vector<double> fd_weights(double x0, std::span<const double> xs, int order);

}  // namespace orthoglide
