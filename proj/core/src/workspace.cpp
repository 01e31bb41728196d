#include "orthoglide/workspace.hpp"

#include "orthoglide/error.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/performance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace orthoglide {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void track_min(Extreme& e, double value, const ToolPose& where) {
  if (!e.found || value < e.value) e = {value, where, true};
}

void track_max(Extreme& e, double value, const ToolPose& where) {
  if (!e.found || value > e.value) e = {value, where, true};
}

double excess(const std::array<double, 3>& s, const Bounds& b) {
  return std::max({0.0, (b.s_lo - s[0]) / b.s_lo, (s[2] - b.s_hi) / b.s_hi});
}

GridPoint evaluate(const DesignParams& d, const ToolPose& p, bool on_diagonal, const Bounds& b) {
  GridPoint g;
  g.pose = p;
  g.on_diagonal = on_diagonal;
  g.sigma_fwd = {kNaN, kNaN, kNaN};
  g.kappa = kNaN;
  try {
    const IkSolution ik = inverse_kinematics(p, d);
    const TransmissionReport rep = transmission_factors(inverse_jacobian(p, ik.joints, d), d.tol);
    g.reachable = !rep.singular();
    g.within_stroke = ik.within_stroke;
    g.sigma_fwd = rep.sigma_fwd;
    g.kappa = rep.kappa;
  } catch (const Error&) {
    return g;
  }
  if (g.reachable) {
    const double tol = on_diagonal ? kDiagonalBoundTol : 0.0;
    g.within_bounds = g.sigma_fwd[0] >= b.s_lo * (1.0 - tol) && g.sigma_fwd[2] <= b.s_hi * (1.0 + tol);
  }
  return g;
}

}  // namespace

void Bounds::validate() const {
  if (!(s_lo > 0.0 && s_lo <= 1.0 && s_hi >= 1.0 && std::isfinite(s_hi))) {
    throw Error(ErrorKind::InvalidArgument, "transmission bounds must satisfy 0 < s_lo <= 1 <= s_hi");
  }
}

std::vector<DiagonalSample> diagonal_profile(const DesignParams& d, double u_min, double u_max,
                                             int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "diagonal profile needs n >= 2");
  if (!(u_min <= u_max)) throw Error(ErrorKind::InvalidArgument, "u_min must not exceed u_max");
  const double L = d.leg_length;
  const double limit = L / std::sqrt(2.0);
  if (std::abs(u_min) >= limit || std::abs(u_max) >= limit) {
    throw Error(ErrorKind::RangeOutsideWorkspace,
                "diagonal range leaves |u| < L/sqrt(2) = " + std::to_string(limit));
  }

  std::vector<DiagonalSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n - 1);
    const double u = k == n - 1 ? u_max : u_min + (u_max - u_min) * t;
    DiagonalSample s;
    s.u = u;
    s.a = u / std::sqrt(L * L - 2.0 * u * u);
    const double axial = std::abs(1.0 + 2.0 * s.a);
    const double lateral = std::abs(1.0 - s.a);
    const auto inv = [](double x) {
      return x == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / x;
    };
    s.sigma_fwd = {inv(axial), inv(lateral), inv(lateral)};
    std::sort(s.sigma_fwd.begin(), s.sigma_fwd.end());
    const double hi = std::max(axial, lateral);
    s.kappa = hi == 0.0 ? 0.0 : std::min(axial, lateral) / hi;
    out.push_back(s);
  }
  return out;
}

GridReport verify_cube(const DesignParams& d, const CubeSpec& cube, const Bounds& b,
                       int n_per_axis) {
  d.validate();
  b.validate();
  if (!(cube.side >= 0.0)) throw Error(ErrorKind::InvalidArgument, "cube side must be >= 0");
  if (n_per_axis < 2) throw Error(ErrorKind::InvalidArgument, "grid needs n_per_axis >= 2");

  const int n = cube.side == 0.0 ? 1 : n_per_axis;
  const ToolPose q2 = cube.q2();
  std::vector<double> coord[3];
  for (int axis = 0; axis < 3; ++axis) {
    for (int k = 0; k < n; ++k) {
      if (n == 1) {
        coord[axis].push_back(cube.q1[axis]);
      } else if (k == n - 1) {
        coord[axis].push_back(q2[axis]);
      } else {
        const double t = static_cast<double>(k) / static_cast<double>(n - 1);
        coord[axis].push_back(cube.q1[axis] + cube.side * t);
      }
    }
  }

  GridReport rep;
  rep.n_per_axis = n;
  rep.points.resize(static_cast<std::size_t>(n) * n * n);
  // Each point is independent; results land at their grid index.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const std::size_t idx = (static_cast<std::size_t>(i) * n + j) * n + k;
        rep.points[idx] =
            evaluate(d, ToolPose(coord[0][i], coord[1][j], coord[2][k]), i == j && j == k, b);
      }
    }
  }

  for (const GridPoint& g : rep.points) {
    if (!g.reachable) {
      ++rep.unreachable;
      continue;
    }
    if (!g.within_stroke) ++rep.stroke_violations;
    if (!g.within_bounds) ++rep.bound_violations;
    track_min(rep.sigma_min, g.sigma_fwd[0], g.pose);
    track_max(rep.sigma_max, g.sigma_fwd[2], g.pose);
    const double ex = excess(g.sigma_fwd, b);
    if (g.on_diagonal) {
      track_min(rep.diag_sigma_min, g.sigma_fwd[0], g.pose);
      track_max(rep.diag_sigma_max, g.sigma_fwd[2], g.pose);
      rep.diag_excess = std::max(rep.diag_excess, ex);
    } else {
      track_min(rep.offdiag_sigma_min, g.sigma_fwd[0], g.pose);
      track_max(rep.offdiag_sigma_max, g.sigma_fwd[2], g.pose);
      rep.offdiag_excess = std::max(rep.offdiag_excess, ex);
    }
  }
  return rep;
}

WorkspaceMap workspace_map(const DesignParams& d, const CubeSpec& region, const Bounds& b,
                           int n_per_axis) {
  WorkspaceMap out;
  out.report = verify_cube(d, region, b, n_per_axis);
  out.records.reserve(out.report.points.size());
  for (const GridPoint& g : out.report.points) {
    out.records.push_back({g.pose[0], g.pose[1], g.pose[2], g.reachable, g.within_stroke,
                           g.sigma_fwd[0], g.sigma_fwd[2], g.kappa});
  }
  return out;
}

}  // namespace orthoglide
