#pragma once

// Grid evaluation of transmission factors over an axis-aligned cube.
//
// verify_cube is the brute-force check that a design reaching the two
// reference points within bounds also keeps the whole cube within bounds. It
// evaluates every point through the generic SVD path, independently of the
// closed-form diagonal model used by the synthesis.

#include "orthoglide/types.hpp"

#include <cstddef>
#include <vector>

namespace orthoglide {

/// Axis-aligned cube from q1 to q1 + (side, side, side).
struct CubeSpec {
  ToolPose q1;
  double side = 0.0;

  ToolPose q2() const { return ToolPose(q1.v.array() + side); }
};

/// Admissible transmission-factor interval, 0 < s_lo <= 1 <= s_hi.
struct Bounds {
  double s_lo = 0.5;
  double s_hi = 2.0;

  void validate() const;
};

struct DiagonalSample {
  double u = 0.0;  // pose (u, u, u)
  double a = 0.0;  // u / sqrt(L^2 - 2u^2)
  std::array<double, 3> sigma_fwd{};
  double kappa = 0.0;
};

/// Closed-form spectrum on the x = y = z diagonal: J^-1 has 1 on the diagonal
/// and a elsewhere, so its singular values are |1 + 2a| and |1 - a| (twice).
/// Throws RangeOutsideWorkspace when |u| >= L / sqrt(2) at either end.
std::vector<DiagonalSample> diagonal_profile(const DesignParams& d, double u_min, double u_max,
                                             int n);

struct GridPoint {
  ToolPose pose;
  bool on_diagonal = false;
  bool reachable = false;  // IK solved and nonsingular
  bool within_stroke = false;
  /// NaN when unreachable.
  std::array<double, 3> sigma_fwd{};
  double kappa = 0.0;
  bool within_bounds = false;
};

struct Extreme {
  double value = 0.0;
  ToolPose where;
  bool found = false;
};

struct GridReport {
  int n_per_axis = 0;
  std::vector<GridPoint> points;  // x slowest, z fastest

  std::size_t unreachable = 0;
  std::size_t stroke_violations = 0;
  std::size_t bound_violations = 0;

  Extreme sigma_min;  // smallest transmission factor anywhere
  Extreme sigma_max;  // largest transmission factor anywhere
  Extreme diag_sigma_min;
  Extreme diag_sigma_max;
  Extreme offdiag_sigma_min;
  Extreme offdiag_sigma_max;

  /// Largest relative excursion past the bounds on / off the diagonal
  /// (0 when contained).
  double diag_excess = 0.0;
  double offdiag_excess = 0.0;

  bool clean() const { return unreachable == 0 && stroke_violations == 0 && bound_violations == 0; }
};

/// Relative tolerance applied to bound checks at diagonal grid points.
inline constexpr double kDiagonalBoundTol = 1e-9;

/// Closed grid (faces and corners included) of n_per_axis^3 points; a cube of
/// side 0 is a single point.
GridReport verify_cube(const DesignParams& d, const CubeSpec& cube, const Bounds& b,
                       int n_per_axis);

/// One exported row per grid point.
struct WorkspaceRecord {
  double x = 0.0, y = 0.0, z = 0.0;
  bool reachable = false;
  bool within_stroke = false;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double kappa = 0.0;

  friend bool operator==(const WorkspaceRecord&, const WorkspaceRecord&) = default;
};

struct WorkspaceMap {
  GridReport report;
  std::vector<WorkspaceRecord> records;
};

WorkspaceMap workspace_map(const DesignParams& d, const CubeSpec& region, const Bounds& b,
                           int n_per_axis);

}  // namespace orthoglide
