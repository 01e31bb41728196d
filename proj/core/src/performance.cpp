#include "orthoglide/performance.hpp"

#include "orthoglide/error.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace orthoglide {
namespace {

// Singular values below this fraction of the largest count as zero.
constexpr double kRankTol = 4.0 * std::numeric_limits<double>::epsilon();

}  // namespace

Svd3 svd3(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d a = m;
  Eigen::Matrix3d v = Eigen::Matrix3d::Identity();
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double alpha = a.col(p).squaredNorm();
        const double beta = a.col(q).squaredNorm();
        const double gamma = a.col(p).dot(a.col(q));
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (Eigen::Matrix3d* x : {&a, &v}) {
          const Eigen::Vector3d cp = x->col(p);
          const Eigen::Vector3d cq = x->col(q);
          x->col(p) = c * cp - s * cq;
          x->col(q) = s * cp + c * cq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<int, 3> order{0, 1, 2};
  Eigen::Vector3d norms(a.col(0).norm(), a.col(1).norm(), a.col(2).norm());
  std::sort(order.begin(), order.end(), [&](int i, int j) { return norms[i] > norms[j]; });

  Svd3 out;
  for (int k = 0; k < 3; ++k) {
    const int src = order[k];
    out.values[k] = norms[src];
    out.v.col(k) = v.col(src);
    out.u.col(k) = norms[src] > 0.0 ? Eigen::Vector3d(a.col(src) / norms[src])
                                    : Eigen::Vector3d::Zero();
  }
  // Rank 2: the null direction of u follows from the other two.
  if (out.values[2] == 0.0 && out.values[1] > 0.0) out.u.col(2) = out.u.col(0).cross(out.u.col(1));
  return out;
}

bool TransmissionReport::singular() const {
  return parallel_flag || std::isinf(sigma_fwd[2]) ||
         std::any_of(serial_flags.begin(), serial_flags.end(), [](bool f) { return f; });
}

TransmissionReport transmission_factors(const InverseJacobian& jinv, const Tolerances& tol) {
  const Svd3 dec = svd3(jinv.m);
  const double smax = dec.values[0];

  TransmissionReport r;
  // Descending sigma(J^-1) -> ascending reciprocals.
  for (int k = 0; k < 3; ++k) {
    const double s = dec.values[k];
    r.sigma_fwd[k] = (s <= kRankTol * smax || s == 0.0) ? std::numeric_limits<double>::infinity()
                                                        : 1.0 / s;
  }
  r.kappa = condition_number(jinv);
  r.det_inv = jinv.m.determinant();
  r.parallel_flag = std::abs(r.det_inv) <= tol.parallel;
  for (int i = 0; i < 3; ++i) {
    const double row = jinv.m.row(i).norm();
    r.serial_flags[i] = !std::isfinite(row) || 1.0 / row <= tol.serial;
  }
  return r;
}

double condition_number(const InverseJacobian& jinv) {
  const Svd3 dec = svd3(jinv.m);
  const double smax = dec.values[0];
  const double smin = dec.values[2];
  if (smax == 0.0 || smin <= kRankTol * smax) return 0.0;
  return smin / smax;
}

IsotropyResidual isotropy_residual(const ToolPose& p, const DesignParams& d) {
  const JointVector rho = inverse_kinematics(p, d).joints;
  const LegStates states = leg_states(p, rho, d);

  IsotropyResidual out;
  std::array<Eigen::Vector3d, 3> leg;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < 3; ++i) {
    leg[i] = states.legs[i].c - states.legs[i].b;
    const double ratio = leg[i].norm() / states.legs[i].eta;
    out.ratio_dev = std::max(out.ratio_dev, std::abs(ratio - 1.0));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  out.ratio_spread = hi - lo;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double c = std::abs(leg[i].dot(leg[j])) / (leg[i].norm() * leg[j].norm());
      out.ortho_dev = std::max(out.ortho_dev, c);
    }
  }
  return out;
}

Ellipsoid manipulability_ellipsoid(const InverseJacobian& jinv, const Tolerances& tol) {
  const TransmissionReport rep = transmission_factors(jinv, tol);
  if (rep.parallel_flag || std::isinf(rep.sigma_fwd[2])) {
    throw Error(ErrorKind::ParallelSingularity, "inverse Jacobian is singular");
  }
  // J = V diag(1/sigma) U^T maps the unit ball onto axes V with lengths
  // 1/sigma(J^-1); svd3 orders sigma(J^-1) descending, so columns line up
  // with the ascending sigma_fwd.
  const Svd3 dec = svd3(jinv.m);
  Ellipsoid e;
  e.semi_axes = rep.sigma_fwd;
  e.directions = dec.v;
  return e;
}

}  // namespace orthoglide
