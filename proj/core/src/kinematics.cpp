#include "orthoglide/kinematics.hpp"

#include "orthoglide/error.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace orthoglide {
namespace {

constexpr int kOther[3][2] = {{1, 2}, {0, 2}, {0, 1}};

std::string leg_name(int leg) { return "leg " + std::to_string(leg + 1); }

// Sphere residuals |p - rho_i e_i|^2 - L^2.
Eigen::Vector3d sphere_residual(const Eigen::Vector3d& p, const JointVector& rho, double L) {
  Eigen::Vector3d f;
  for (int i = 0; i < 3; ++i) {
    f[i] = (p - rho[i] * slider_axis(i)).squaredNorm() - L * L;
  }
  return f;
}

// A few Newton steps on the sphere equations; the closed forms lose a few
// digits when some rho_i is small.
Eigen::Vector3d polish(Eigen::Vector3d p, const JointVector& rho, double L) {
  for (int iter = 0; iter < 4; ++iter) {
    Eigen::Matrix3d jac;
    for (int i = 0; i < 3; ++i) jac.row(i) = 2.0 * (p - rho[i] * slider_axis(i)).transpose();
    Eigen::Matrix3d inv;
    bool invertible = false;
    jac.computeInverseWithCheck(inv, invertible, 1e-12 * L * L);
    if (!invertible) break;
    const Eigen::Vector3d step = inv * sphere_residual(p, rho, L);
    p -= step;
    if (step.norm() <= 1e-15 * L) break;
  }
  return p;
}

bool in_working_mode(const Eigen::Vector3d& p, const JointVector& rho, const DesignParams& d) {
  for (int i = 0; i < 3; ++i) {
    if (!(p[i] - rho[i] > d.tol.serial * d.leg_length)) return false;
  }
  return true;
}

// Solves with exactly one slider at the origin: that sphere alone fixes |p|^2.
std::optional<Eigen::Vector3d> solve_with_zero_slider(int zero, const JointVector& rho,
                                                      double L) {
  const double s = L * L;
  Eigen::Vector3d p;
  double rest = s;
  for (int j : kOther[zero]) {
    p[j] = (s + rho[j] * rho[j] - L * L) / (2.0 * rho[j]);
    rest -= p[j] * p[j];
  }
  if (rest < -1e-12 * s) return std::nullopt;
  p[zero] = std::sqrt(std::max(rest, 0.0));
  return p;
}

}  // namespace

Eigen::Vector3d slider_axis(int leg) { return Eigen::Vector3d::Unit(leg); }

IkSolution inverse_kinematics(const ToolPose& p, const DesignParams& d) {
  const double L = d.leg_length;
  std::array<double, 3> radicand{};
  for (int i = 0; i < 3; ++i) {
    const auto [j, k] = kOther[i];
    radicand[i] = L * L - p[j] * p[j] - p[k] * p[k];
  }
  for (int i = 0; i < 3; ++i) {
    if (radicand[i] < 0.0) {
      throw Error(ErrorKind::Unreachable, "pose out of reach of " + leg_name(i), i);
    }
  }
  IkSolution out;
  for (int i = 0; i < 3; ++i) {
    const double eta = std::sqrt(radicand[i]);
    if (eta <= d.tol.serial * L) {
      throw Error(ErrorKind::SerialSingularity,
                  "serial singularity on " + leg_name(i) + " (parallelogram normal to slider)", i);
    }
    out.joints[i] = p[i] - eta;
  }
  out.within_stroke = d.within_stroke(out.joints);
  return out;
}

ToolPose forward_kinematics(const JointVector& rho, const DesignParams& d) {
  const double L = d.leg_length;
  const double zero_tol = 1e-9 * L;

  std::vector<int> zeros;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(rho[i]) <= zero_tol) zeros.push_back(i);
  }
  if (zeros.size() > 1) {
    throw Error(ErrorKind::DegenerateInput,
                "two or more sliders at the origin: spheres coincide, no unique assembly");
  }

  std::vector<Eigen::Vector3d> candidates;
  if (zeros.size() == 1) {
    if (auto p = solve_with_zero_slider(zeros.front(), rho, L)) candidates.push_back(*p);
  } else {
    // Sphere i gives S - 2 rho_i x_i + rho_i^2 = L^2 with S = |p|^2, so
    // x_i = (S + k_i) / (2 rho_i); substituting into S = sum x_i^2 yields
    // A S^2 + B S + C = 0.
    double A = 0.0, B = -1.0, C = 0.0;
    std::array<double, 3> k{}, w{};
    for (int i = 0; i < 3; ++i) {
      k[i] = rho[i] * rho[i] - L * L;
      w[i] = 1.0 / (4.0 * rho[i] * rho[i]);
      A += w[i];
      B += 2.0 * w[i] * k[i];
      C += w[i] * k[i] * k[i];
    }
    double disc = B * B - 4.0 * A * C;
    if (disc < -1e-12 * B * B) {
      throw Error(ErrorKind::NoAssemblyMode, "slider spheres have no common point");
    }
    disc = std::max(disc, 0.0);
    // Stable pair of roots.
    const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
    std::array<double, 2> roots{q / A, q != 0.0 ? C / q : q / A};
    std::sort(roots.begin(), roots.end());
    for (double s : roots) {
      if (s < -1e-12 * L * L) continue;
      Eigen::Vector3d p;
      for (int i = 0; i < 3; ++i) p[i] = (s + k[i]) / (2.0 * rho[i]);
      candidates.push_back(p);
    }
  }

  for (const auto& raw : candidates) {
    const Eigen::Vector3d p = polish(raw, rho, L);
    if (!in_working_mode(p, rho, d)) continue;
    if (sphere_residual(p, rho, L).cwiseAbs().maxCoeff() > 1e-6 * L * L) continue;
    return ToolPose(p);
  }
  throw Error(ErrorKind::NoAssemblyMode, "no assembly mode in the working mode eta_i > 0");
}

LegStates leg_states(const ToolPose& p, const JointVector& rho, const DesignParams& d) {
  const double L = d.leg_length;
  LegStates out;
  for (int i = 0; i < 3; ++i) {
    LegState& leg = out.legs[i];
    leg.a = Eigen::Vector3d::Zero();
    leg.b = rho[i] * slider_axis(i);
    leg.c = p.v;
    leg.eta = (leg.c - leg.b).dot(slider_axis(i));
    out.closure_residual = std::max(out.closure_residual, std::abs((leg.c - leg.b).norm() - L));
  }
  if (out.closure_residual > d.tol.closure * L) {
    throw Error(ErrorKind::InconsistentPair, "pose and joints do not satisfy leg closure");
  }
  return out;
}

InverseJacobian inverse_jacobian(const ToolPose& p, const JointVector& rho,
                                 const DesignParams& d) {
  const LegStates states = leg_states(p, rho, d);
  InverseJacobian jinv;
  for (int i = 0; i < 3; ++i) {
    const LegState& leg = states.legs[i];
    if (leg.eta <= d.tol.serial * d.leg_length) {
      throw Error(ErrorKind::SerialSingularity, "serial singularity on " + leg_name(i), i);
    }
    jinv.m.row(i) = (leg.c - leg.b).transpose() / leg.eta;
  }
  return jinv;
}

InverseJacobian inverse_jacobian(const ToolPose& p, const DesignParams& d) {
  return inverse_jacobian(p, inverse_kinematics(p, d).joints, d);
}

}  // namespace orthoglide
