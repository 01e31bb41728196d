#pragma once

// Dimensional synthesis from a prescribed cube.
//
// On the diagonal pose (u, u, u) the inverse Jacobian depends on the single
// coupling ratio a = u / sqrt(L^2 - 2u^2), with transmission factors
// 1/(1 + 2a) and 1/(1 - a). Bounding both by [s_lo, s_hi] gives an interval
// [a_min, a_max]; its endpoints are the reference points Q1 (a_min < 0) and
// Q2 (a_max > 0). The cube spans Q1..Q2, which fixes L; the slider travel is
// then the IK range over the whole cube.

#include "orthoglide/types.hpp"
#include "orthoglide/workspace.hpp"

#include <utility>

namespace orthoglide {

struct DiagonalLimits {
  double a_min = 0.0;
  double a_max = 0.0;
};

/// Throws InvalidArgument for malformed bounds and DegenerateBounds when the
/// admissible interval collapses to a = 0.
DiagonalLimits diagonal_limits(const Bounds& b);

/// u / L at coupling ratio a: a / sqrt(1 + 2a^2).
double diagonal_offset_ratio(double a);

/// Q1 at a_min, Q2 at a_max, both on x = y = z.
std::pair<ToolPose, ToolPose> reference_points(double leg_length, const DiagonalLimits& lims);

struct SynthesisResult {
  double lw = 0.0;
  Bounds bounds;
  DiagonalLimits limits;
  double leg_length = 0.0;
  ToolPose q1, q2;
  CubeSpec cube;
  double stroke_lo = 0.0;  // rho at (u1, 0, 0) along its own axis
  double stroke_hi = 0.0;  // rho at (u2, u2, u2)
  double stroke = 0.0;     // stroke_hi - stroke_lo
  double ratio = 0.0;      // lw / stroke
  double lw_over_leg = 0.0;
};

SynthesisResult synthesize(double lw, const Bounds& b);

/// Machine described by a synthesis result, with identical strokes on the
/// three axes.
DesignParams to_design(const SynthesisResult& s, double motor_vmax = 1200.0,
                       double motor_amax = 20000.0);

}  // namespace orthoglide
