#pragma once

// CSV exchange formats. Numbers are written with 12 significant digits so
// identical inputs give byte-identical files.
//
//   workspace:  x_mm,y_mm,z_mm,reachable,within_stroke,sigma_min,sigma_max,kappa
//   waypoints:  t_s,x_mm,y_mm,z_mm
//   diagonal:   u_mm,a,sigma_1,sigma_2,sigma_3,kappa
//   profile:    t_s,x_mm,y_mm,z_mm,rho1_mm,...,rhod1_mm_s,...,rhodd1_mm_s2,...,
//               vflag1..3,aflag1..3

#include "orthoglide/trajectory.hpp"
#include "orthoglide/workspace.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace orthoglide::io {

inline constexpr const char* kWorkspaceHeader =
    "x_mm,y_mm,z_mm,reachable,within_stroke,sigma_min,sigma_max,kappa";
inline constexpr const char* kWaypointHeader = "t_s,x_mm,y_mm,z_mm";
inline constexpr const char* kDiagonalHeader = "u_mm,a,sigma_1,sigma_2,sigma_3,kappa";
inline constexpr const char* kProfileHeader =
    "t_s,x_mm,y_mm,z_mm,rho1_mm,rho2_mm,rho3_mm,rhod1_mm_s,rhod2_mm_s,rhod3_mm_s,"
    "rhodd1_mm_s2,rhodd2_mm_s2,rhodd3_mm_s2,vflag1,vflag2,vflag3,aflag1,aflag2,aflag3";

/// %.12g, with "nan", "inf" and "-inf" spelled out.
std::string format_number(double x);
/// Value as printed by format_number, parsed back.
double round12(double x);

void write_workspace_csv(std::ostream& os, std::span<const WorkspaceRecord> records);
/// Throws Error(InvalidArgument) on a malformed header or row.
std::vector<WorkspaceRecord> read_workspace_csv(std::istream& is);

void write_waypoints_csv(std::ostream& os, std::span<const Waypoint> waypoints);
std::vector<Waypoint> read_waypoints_csv(std::istream& is);

void write_diagonal_csv(std::ostream& os, std::span<const DiagonalSample> samples);
void write_profile_csv(std::ostream& os, const PathProfile& profile);

}  // namespace orthoglide::io
