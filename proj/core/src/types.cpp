#include "orthoglide/types.hpp"

#include "orthoglide/error.hpp"

#include <cmath>
#include <string>

namespace orthoglide {

void DesignParams::validate() const {
  if (!(std::isfinite(leg_length) && leg_length > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "leg length must be positive and finite");
  }
  for (int i = 0; i < 3; ++i) {
    if (!(stroke_min[i] < stroke_max[i])) {
      throw Error(ErrorKind::InvalidArgument,
                  "stroke_min must be below stroke_max on axis " + std::to_string(i), i);
    }
  }
  if (!(motor_vmax > 0.0)) throw Error(ErrorKind::InvalidArgument, "motor_vmax must be positive");
  if (!(motor_amax > 0.0)) throw Error(ErrorKind::InvalidArgument, "motor_amax must be positive");
  if (!(tol.serial > 0.0 && tol.closure > 0.0 && tol.parallel > 0.0 && tol.stroke >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
}

DesignParams DesignParams::with_leg_length(double leg_length) {
  DesignParams d;
  d.leg_length = leg_length;
  return d;
}

bool DesignParams::within_stroke(const JointVector& rho) const {
  const double slack = tol.stroke * leg_length;
  for (int i = 0; i < 3; ++i) {
    if (rho[i] < stroke_min[i] - slack || rho[i] > stroke_max[i] + slack) return false;
  }
  return true;
}

}  // namespace orthoglide
