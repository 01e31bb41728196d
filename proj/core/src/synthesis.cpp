#include "orthoglide/synthesis.hpp"

#include "orthoglide/error.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace orthoglide {

DiagonalLimits diagonal_limits(const Bounds& b) {
  b.validate();
  // 1/(1+2a) in [s_lo, s_hi]  <=>  a in [(1/s_hi - 1)/2, (1/s_lo - 1)/2]
  // 1/(1-a)  in [s_lo, s_hi]  <=>  a in [1 - 1/s_lo,     1 - 1/s_hi]
  DiagonalLimits lims;
  lims.a_max = std::min((1.0 / b.s_lo - 1.0) / 2.0, 1.0 - 1.0 / b.s_hi);
  lims.a_min = std::max((1.0 / b.s_hi - 1.0) / 2.0, 1.0 - 1.0 / b.s_lo);
  if (lims.a_min == lims.a_max) {
    throw Error(ErrorKind::DegenerateBounds,
                "bounds admit only the isotropic point; widen s_lo/s_hi away from 1");
  }
  return lims;
}

double diagonal_offset_ratio(double a) { return a / std::sqrt(1.0 + 2.0 * a * a); }

std::pair<ToolPose, ToolPose> reference_points(double leg_length, const DiagonalLimits& lims) {
  if (!(leg_length > 0.0)) throw Error(ErrorKind::InvalidArgument, "leg length must be positive");
  const double u1 = diagonal_offset_ratio(lims.a_min) * leg_length;
  const double u2 = diagonal_offset_ratio(lims.a_max) * leg_length;
  return {ToolPose(u1, u1, u1), ToolPose(u2, u2, u2)};
}

SynthesisResult synthesize(double lw, const Bounds& b) {
  if (!(std::isfinite(lw) && lw > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "cube side Lw must be positive");
  }
  SynthesisResult r;
  r.lw = lw;
  r.bounds = b;
  r.limits = diagonal_limits(b);

  const double span = diagonal_offset_ratio(r.limits.a_max) - diagonal_offset_ratio(r.limits.a_min);
  r.leg_length = lw / span;
  std::tie(r.q1, r.q2) = reference_points(r.leg_length, r.limits);
  r.cube = CubeSpec{r.q1, lw};

  const double L = r.leg_length;
  const double u1 = r.q1[0];
  const double u2 = r.q2[0];
  // rho_1 = x - sqrt(L^2 - y^2 - z^2): largest at x = u2 with |y|, |z| maximal,
  // smallest at x = u1 with y = z = 0 (inside since u1 < 0 < u2).
  const double far = std::max(std::abs(u1), std::abs(u2));
  r.stroke_hi = u2 - std::sqrt(L * L - 2.0 * far * far);
  r.stroke_lo = u1 - L;
  r.stroke = r.stroke_hi - r.stroke_lo;
  r.ratio = lw / r.stroke;
  r.lw_over_leg = lw / L;
  return r;
}

DesignParams to_design(const SynthesisResult& s, double motor_vmax, double motor_amax) {
  DesignParams d;
  d.leg_length = s.leg_length;
  d.stroke_min = {s.stroke_lo, s.stroke_lo, s.stroke_lo};
  d.stroke_max = {s.stroke_hi, s.stroke_hi, s.stroke_hi};
  d.motor_vmax = motor_vmax;
  d.motor_amax = motor_amax;
  return d;
}

}  // namespace orthoglide
