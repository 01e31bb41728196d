#include "orthoglide/trajectory.hpp"

#include "orthoglide/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace orthoglide {

JointVelocity joint_velocity(const ToolPose& p, const ToolVelocity& v, const DesignParams& d) {
  return JointVelocity(inverse_jacobian(p, d).m * v.v);
}

double max_feasible_tool_speed(const ToolPose& p, const Eigen::Vector3d& dir,
                               const DesignParams& d, JointSpeedNorm norm) {
  if (std::abs(dir.norm() - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidArgument, "direction must be a unit vector");
  }
  const Eigen::Vector3d per_unit = inverse_jacobian(p, d).m * dir;
  const double gain =
      norm == JointSpeedNorm::Euclidean ? per_unit.norm() : per_unit.cwiseAbs().maxCoeff();
  return gain == 0.0 ? std::numeric_limits<double>::infinity() : d.motor_vmax / gain;
}

bool PathProfile::any_velocity_flag() const {
  return std::any_of(samples.begin(), samples.end(), [](const PathSample& s) {
    return s.vel_flag[0] || s.vel_flag[1] || s.vel_flag[2];
  });
}

bool PathProfile::any_acceleration_flag() const {
  return std::any_of(samples.begin(), samples.end(), [](const PathSample& s) {
    return s.acc_flag[0] || s.acc_flag[1] || s.acc_flag[2];
  });
}

// Fornberg's recursion (Math. Comp. 51, 1988).
std::vector<double> fd_weights(double x0, std::span<const double> xs, int order) {
  const int n = static_cast<int>(xs.size());
  const int m = order;
  // c[j][k]: weight of node j for derivative k.
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = c[j][m];
  return w;
}

namespace {

// Node window for sample i: centred inside, one-sided at the ends with
// `end_nodes` points.
std::pair<int, int> window(int i, int n, int end_nodes) {
  if (i == 0) return {0, std::min(end_nodes, n)};
  if (i == n - 1) return {std::max(0, n - end_nodes), n};
  return {i - 1, i + 2};
}

Eigen::Vector3d derivative(const std::vector<double>& t, const std::vector<JointVector>& q, int i,
                           int order, int end_nodes) {
  const int n = static_cast<int>(t.size());
  const auto [lo, hi] = window(i, n, end_nodes);
  if (hi - lo <= order) return Eigen::Vector3d::Zero();
  const std::span<const double> nodes(t.data() + lo, static_cast<std::size_t>(hi - lo));
  const std::vector<double> w = fd_weights(t[i], nodes, order);
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  for (int j = lo; j < hi; ++j) out += w[j - lo] * q[j].v;
  return out;
}

}  // namespace

PathProfile profile_path(std::span<const Waypoint> waypoints, const DesignParams& d) {
  const int n = static_cast<int>(waypoints.size());
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "a path needs at least two waypoints");
  for (int i = 1; i < n; ++i) {
    if (!(waypoints[i].t > waypoints[i - 1].t)) {
      throw Error(ErrorKind::NonMonotoneTime,
                  "waypoint times must increase strictly (at index " + std::to_string(i) + ")", i);
    }
  }

  std::vector<double> t(n);
  std::vector<JointVector> q(n);
  for (int i = 0; i < n; ++i) {
    t[i] = waypoints[i].t;
    try {
      q[i] = inverse_kinematics(waypoints[i].pose, d).joints;
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " at waypoint " + std::to_string(i), i);
    }
  }

  PathProfile prof;
  prof.samples.resize(n);
  for (int i = 0; i < n; ++i) {
    PathSample& s = prof.samples[i];
    s.t = t[i];
    s.pose = waypoints[i].pose;
    s.joints = q[i];
    // Velocity: 3 nodes everywhere. Acceleration: 4 one-sided nodes at the
    // ends keep second order there.
    s.joint_vel = JointVelocity(derivative(t, q, i, 1, 3));
    s.joint_acc = derivative(t, q, i, 2, 4);
    for (int k = 0; k < 3; ++k) {
      s.vel_flag[k] = std::abs(s.joint_vel[k]) > d.motor_vmax;
      s.acc_flag[k] = std::abs(s.joint_acc[k]) > d.motor_amax;
    }
  }
  return prof;
}

}  // namespace orthoglide
