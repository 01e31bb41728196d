#include "orthoglide/io.hpp"

#include "orthoglide/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace orthoglide::io {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  return s.substr(start);
}

double parse_number(const std::string& raw, int line_no) {
  const std::string s = strip(raw);
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "line " + std::to_string(line_no) + ": not a number: '" + s + "'");
  }
  return v;
}

bool parse_flag(const std::string& raw, int line_no) {
  const std::string s = strip(raw);
  if (s == "1") return true;
  if (s == "0") return false;
  throw Error(ErrorKind::InvalidArgument,
              "line " + std::to_string(line_no) + ": expected 0 or 1, got '" + s + "'");
}

// Reads the header and returns the remaining non-empty rows split into fields.
std::vector<std::vector<std::string>> read_rows(std::istream& is, const char* header) {
  std::string line;
  if (!std::getline(is, line) || strip(line) != header) {
    throw Error(ErrorKind::InvalidArgument, std::string("expected CSV header '") + header + "'");
  }
  const std::size_t width = split(header).size();
  std::vector<std::vector<std::string>> rows;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (strip(line).empty()) continue;
    auto fields = split(strip(line));
    if (fields.size() != width) {
      throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": expected " +
                                                  std::to_string(width) + " fields");
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

const char* flag(bool b) { return b ? "1" : "0"; }

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  return fmt::format("{:.12g}", x);
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

void write_workspace_csv(std::ostream& os, std::span<const WorkspaceRecord> records) {
  os << kWorkspaceHeader << '\n';
  for (const WorkspaceRecord& r : records) {
    os << format_number(r.x) << ',' << format_number(r.y) << ',' << format_number(r.z) << ','
       << flag(r.reachable) << ',' << flag(r.within_stroke) << ',' << format_number(r.sigma_min)
       << ',' << format_number(r.sigma_max) << ',' << format_number(r.kappa) << '\n';
  }
}

std::vector<WorkspaceRecord> read_workspace_csv(std::istream& is) {
  std::vector<WorkspaceRecord> out;
  int line_no = 1;
  for (const auto& f : read_rows(is, kWorkspaceHeader)) {
    ++line_no;
    out.push_back({parse_number(f[0], line_no), parse_number(f[1], line_no),
                   parse_number(f[2], line_no), parse_flag(f[3], line_no),
                   parse_flag(f[4], line_no), parse_number(f[5], line_no),
                   parse_number(f[6], line_no), parse_number(f[7], line_no)});
  }
  return out;
}

void write_waypoints_csv(std::ostream& os, std::span<const Waypoint> waypoints) {
  os << kWaypointHeader << '\n';
  for (const Waypoint& w : waypoints) {
    os << format_number(w.t) << ',' << format_number(w.pose[0]) << ','
       << format_number(w.pose[1]) << ',' << format_number(w.pose[2]) << '\n';
  }
}

std::vector<Waypoint> read_waypoints_csv(std::istream& is) {
  std::vector<Waypoint> out;
  int line_no = 1;
  for (const auto& f : read_rows(is, kWaypointHeader)) {
    ++line_no;
    out.push_back({parse_number(f[0], line_no),
                   ToolPose(parse_number(f[1], line_no), parse_number(f[2], line_no),
                            parse_number(f[3], line_no))});
  }
  return out;
}

void write_diagonal_csv(std::ostream& os, std::span<const DiagonalSample> samples) {
  os << kDiagonalHeader << '\n';
  for (const DiagonalSample& s : samples) {
    os << format_number(s.u) << ',' << format_number(s.a) << ',' << format_number(s.sigma_fwd[0])
       << ',' << format_number(s.sigma_fwd[1]) << ',' << format_number(s.sigma_fwd[2]) << ','
       << format_number(s.kappa) << '\n';
  }
}

void write_profile_csv(std::ostream& os, const PathProfile& profile) {
  os << kProfileHeader << '\n';
  for (const PathSample& s : profile.samples) {
    os << format_number(s.t);
    for (int k = 0; k < 3; ++k) os << ',' << format_number(s.pose[k]);
    for (int k = 0; k < 3; ++k) os << ',' << format_number(s.joints[k]);
    for (int k = 0; k < 3; ++k) os << ',' << format_number(s.joint_vel[k]);
    for (int k = 0; k < 3; ++k) os << ',' << format_number(s.joint_acc[k]);
    for (int k = 0; k < 3; ++k) os << ',' << flag(s.vel_flag[k]);
    for (int k = 0; k < 3; ++k) os << ',' << flag(s.acc_flag[k]);
    os << '\n';
  }
}

}  // namespace orthoglide::io
