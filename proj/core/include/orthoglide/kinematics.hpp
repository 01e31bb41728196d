#pragma once

// Closed-form kinematics of the zero-offset Orthoglide.
//
// Each leg i has its slider on axis e_i of the fixed frame (the sliders are
// mutually orthogonal) and a parallelogram of length L linking the slider
// point B_i = rho_i * e_i to the tool point C_i = P. The fixed offsets of the
// real machine (A_i to the slider axis, C_i to the tool tip) only shift the
// origins of rho and p, so they are absorbed here.
//
// Working mode: eta_i = (c_i - b_i) . e_i > 0 on every leg, i.e. each slider
// sits behind the tool along its own axis. The isotropic configuration
// p = 0, rho = (-L, -L, -L) belongs to this mode.

#include "orthoglide/types.hpp"

#include <Eigen/Core>

#include <array>

namespace orthoglide {

/// Unit direction of slider i (0 = x, 1 = y, 2 = z).
Eigen::Vector3d slider_axis(int leg);

struct IkSolution {
  JointVector joints;
  /// False when some rho_i falls outside [stroke_min_i, stroke_max_i].
  bool within_stroke = true;
};

/// rho_i = p_i - sqrt(L^2 - p_j^2 - p_k^2).
/// Throws Unreachable (negative radicand) or SerialSingularity (eta_i at or
/// below tol.serial * L), with the offending leg index.
IkSolution inverse_kinematics(const ToolPose& p, const DesignParams& d);

/// Intersection of the three spheres of radius L centred at rho_i * e_i,
/// restricted to the working mode. When two assembly modes qualify the one
/// with the smaller |p|^2 is returned.
/// Throws NoAssemblyMode or DegenerateInput (two or more rho_i at zero).
ToolPose forward_kinematics(const JointVector& rho, const DesignParams& d);

struct LegState {
  Eigen::Vector3d a;  // slider axis origin
  Eigen::Vector3d b;  // slider point
  Eigen::Vector3d c;  // tool-side point
  double eta = 0.0;
};

struct LegStates {
  std::array<LegState, 3> legs;
  /// max_i | |c_i - b_i| - L |, in mm.
  double closure_residual = 0.0;
};

/// Throws InconsistentPair when the closure residual exceeds tol.closure * L.
LegStates leg_states(const ToolPose& p, const JointVector& rho, const DesignParams& d);

/// Row i is (c_i - b_i)^T / eta_i; maps tool velocity to slider velocity.
struct InverseJacobian {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
};

/// Throws SerialSingularity when some eta_i is at or below tol.serial * L, and
/// InconsistentPair when (p, rho) do not close.
InverseJacobian inverse_jacobian(const ToolPose& p, const JointVector& rho,
                                 const DesignParams& d);

/// Convenience overload solving the inverse kinematics first.
InverseJacobian inverse_jacobian(const ToolPose& p, const DesignParams& d);

}  // namespace orthoglide
