#include "orthoglide/error.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/synthesis.hpp"
#include "orthoglide/workspace.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace orthoglide;
using namespace orthoglide::testing;

TEST(DiagonalLimits, PrototypeBounds) {
  const DiagonalLimits lims = diagonal_limits(Bounds{0.5, 2.0});
  EXPECT_DOUBLE_EQ(lims.a_min, -0.25);
  EXPECT_DOUBLE_EQ(lims.a_max, 0.5);
  const auto [lo, hi] = scan_diagonal_limits(Bounds{0.5, 2.0}, 1e-4);
  EXPECT_NEAR(lims.a_min, lo, 1e-4);
  EXPECT_NEAR(lims.a_max, hi, 1e-4);
}

TEST(DiagonalLimits, WideBounds) {
  const DiagonalLimits lims = diagonal_limits(Bounds{1.0 / 3.0, 3.0});
  EXPECT_NEAR(lims.a_min, -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(lims.a_max, 2.0 / 3.0, 1e-15);
  const auto [lo, hi] = scan_diagonal_limits(Bounds{1.0 / 3.0, 3.0}, 1e-4);
  EXPECT_NEAR(lims.a_min, lo, 1e-4);
  EXPECT_NEAR(lims.a_max, hi, 1e-4);
}

TEST(DiagonalLimits, AsymmetricBoundsMatchScan) {
  for (const Bounds b : {Bounds{0.9, 100.0}, Bounds{0.2, 1.5}, Bounds{0.6, 1.1}}) {
    const DiagonalLimits lims = diagonal_limits(b);
    const auto [lo, hi] = scan_diagonal_limits(b, 1e-5);
    EXPECT_NEAR(lims.a_min, lo, 1e-5) << b.s_lo << "," << b.s_hi;
    EXPECT_NEAR(lims.a_max, hi, 1e-5) << b.s_lo << "," << b.s_hi;
  }
}

TEST(DiagonalLimits, DegenerateAndInvalidBounds) {
  for (const Bounds b : {Bounds{1.0, 1.0}, Bounds{1.0, 2.0}, Bounds{0.5, 1.0}}) {
    try {
      diagonal_limits(b);
      FAIL() << "expected DegenerateBounds";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DegenerateBounds);
    }
  }
  EXPECT_THROW(diagonal_limits(Bounds{0.0, 2.0}), Error);
  EXPECT_THROW(diagonal_limits(Bounds{1.5, 2.0}), Error);
  EXPECT_THROW(diagonal_limits(Bounds{0.5, 0.8}), Error);
}

TEST(ReferencePoints, PrototypeValues) {
  const auto [q1, q2] = reference_points(kProtoLeg, DiagonalLimits{-0.25, 0.5});
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(q1[i], kProtoU1, 1e-9);
    EXPECT_NEAR(q2[i], kProtoU2, 1e-9);
  }
  EXPECT_NEAR(q1[0] / kProtoLeg, -1.0 / (3.0 * std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(q2[0] / kProtoLeg, 1.0 / std::sqrt(6.0), 1e-15);

  // The closed-form diagonal profile binds exactly at both points.
  const auto d = proto_design();
  const auto prof = diagonal_profile(d, q1[0], q2[0], 2);
  EXPECT_NEAR(prof[0].sigma_fwd[2], 2.0, 1e-12);
  EXPECT_NEAR(prof[1].sigma_fwd[0], 0.5, 1e-12);
  EXPECT_NEAR(prof[1].sigma_fwd[2], 2.0, 1e-12);
}

TEST(ReferencePoints, DegenerateAndLinear) {
  const auto [a, b] = reference_points(300.0, DiagonalLimits{0.0, 0.0});
  EXPECT_EQ(a.v, Eigen::Vector3d::Zero());
  EXPECT_EQ(b.v, Eigen::Vector3d::Zero());
  const DiagonalLimits lims{-0.25, 0.5};
  const auto [q1, q2] = reference_points(300.0, lims);
  const auto [r1, r2] = reference_points(600.0, lims);
  EXPECT_EQ(r1.v, 2.0 * q1.v);
  EXPECT_EQ(r2.v, 2.0 * q2.v);
  EXPECT_THROW(reference_points(0.0, lims), Error);
}

TEST(Synthesize, PrototypeNumbers) {
  const SynthesisResult s = synthesize(200.0, Bounds{0.5, 2.0});
  EXPECT_NEAR(s.leg_length, kProtoLeg, 1e-9);
  EXPECT_NEAR(s.stroke_lo, kProtoStrokeLo, 1e-9);
  EXPECT_NEAR(s.stroke_hi, kProtoStrokeHi, 1e-9);
  EXPECT_NEAR(s.stroke, kProtoStroke, 1e-9);
  EXPECT_NEAR(s.ratio, kProtoRatio, 1e-12);
  // Rounded prototype figures: 310 mm legs, 257 mm travel, r = 0.78.
  EXPECT_NEAR(s.leg_length, 310.6, 0.05);
  EXPECT_NEAR(s.stroke, 257.0, 0.05);
  EXPECT_NEAR(s.ratio, 0.778, 5e-4);
  EXPECT_NEAR(s.leg_length / s.lw * (1.0 / std::sqrt(6.0) + 1.0 / (3.0 * std::sqrt(2.0))), 1.0, 1e-14);
  EXPECT_NEAR(s.stroke / s.leg_length, 0.82745, 5e-6);
  EXPECT_EQ(s.cube.side, 200.0);
  EXPECT_NEAR(s.cube.q2()[0], s.q2[0], 1e-12);
}

TEST(Synthesize, StrokeExtremesAreAttained) {
  const SynthesisResult s = synthesize(200.0, Bounds{0.5, 2.0});
  const DesignParams d = to_design(s);
  const double u1 = s.q1[0], u2 = s.q2[0];
  EXPECT_NEAR(inverse_kinematics(ToolPose(u2, u2, u2), d).joints[0], s.stroke_hi, 1e-9 * s.leg_length);
  EXPECT_NEAR(inverse_kinematics(ToolPose(u1, 0, 0), d).joints[0], s.stroke_lo, 1e-9 * s.leg_length);
  // Brute-force extremes of rho_1 over a dense grid stay inside the stroke.
  const int n = 41;
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Eigen::Vector3d p = s.q1.v + s.lw * Eigen::Vector3d(i, j, k) / (n - 1);
        const double rho = p[0] - std::sqrt(d.leg_length * d.leg_length - p[1] * p[1] - p[2] * p[2]);
        lo = std::min(lo, rho);
        hi = std::max(hi, rho);
      }
    }
  }
  EXPECT_GE(lo, s.stroke_lo - 1e-9);
  EXPECT_LE(hi, s.stroke_hi + 1e-9);
  EXPECT_NEAR(hi, s.stroke_hi, 1e-9);
  // The 41-grid contains y = z = 0 only approximately; stay within a grid step.
  EXPECT_NEAR(lo, s.stroke_lo, 1.0);
}

TEST(Synthesize, ScaleEquivariance) {
  const Bounds b{0.5, 2.0};
  const SynthesisResult s = synthesize(200.0, b);
  const SynthesisResult t = synthesize(400.0, b);
  EXPECT_NEAR(t.leg_length / s.leg_length, 2.0, 1e-12);
  EXPECT_NEAR(t.stroke / s.stroke, 2.0, 1e-12);
  EXPECT_NEAR(t.stroke_lo / s.stroke_lo, 2.0, 1e-12);
  EXPECT_NEAR(t.stroke_hi / s.stroke_hi, 2.0, 1e-12);
  EXPECT_NEAR(t.q1[0] / s.q1[0], 2.0, 1e-12);
  EXPECT_NEAR(t.q2[0] / s.q2[0], 2.0, 1e-12);
  EXPECT_NEAR(t.ratio, s.ratio, 1e-14);
  EXPECT_NEAR(t.leg_length, 621.2, 0.05);
  EXPECT_NEAR(t.stroke, 514.0, 0.05);
  for (double lw : {1.0, 37.5, 1e4}) EXPECT_NEAR(synthesize(lw, b).ratio, s.ratio, 1e-14);
}

TEST(Synthesize, WideBoundsFinding) {
  const SynthesisResult s = synthesize(200.0, Bounds{1.0 / 3.0, 3.0});
  const SynthesisResult p = synthesize(200.0, Bounds{0.5, 2.0});
  EXPECT_NEAR(s.leg_length, kWideLeg, 1e-9);
  EXPECT_NEAR(s.stroke, kWideStroke, 1e-9);
  EXPECT_NEAR(s.ratio, kWideRatio, 1e-12);
  EXPECT_NEAR(s.lw_over_leg, kWideLwOverLeg, 1e-12);
  // Widening the bounds shortens the legs (Lw/L grows) but lengthens the
  // stroke relative to Lw (r shrinks).
  EXPECT_GT(s.lw_over_leg, p.lw_over_leg);
  EXPECT_LT(s.ratio, p.ratio);
}

TEST(Synthesize, FarCornerWhenQ1DominatesQ2) {
  // Here |a_min| > a_max, so the far corner sits on the Q1 side.
  const Bounds b{0.9, 100.0};
  const SynthesisResult s = synthesize(100.0, b);
  ASSERT_GT(std::abs(s.q1[0]), std::abs(s.q2[0]));
  const DesignParams d = to_design(s);
  const double u1 = s.q1[0], u2 = s.q2[0];
  EXPECT_NEAR(inverse_kinematics(ToolPose(u2, u1, u1), d).joints[0], s.stroke_hi, 1e-9 * s.leg_length);
  const GridReport rep = verify_cube(d, s.cube, b, 11);
  EXPECT_EQ(rep.unreachable, 0u);
  EXPECT_EQ(rep.stroke_violations, 0u);
}

TEST(Synthesize, InvalidInput) {
  EXPECT_THROW(synthesize(-5.0, Bounds{0.5, 2.0}), Error);
  EXPECT_THROW(synthesize(0.0, Bounds{0.5, 2.0}), Error);
  try {
    synthesize(200.0, Bounds{1.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateBounds);
  }
}

TEST(Synthesize, ToDesignCarriesStrokes) {
  const SynthesisResult s = synthesize(200.0, Bounds{0.5, 2.0});
  const DesignParams d = to_design(s, 1000.0, 15000.0);
  EXPECT_NO_THROW(d.validate());
  EXPECT_EQ(d.leg_length, s.leg_length);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(d.stroke_min[i], s.stroke_lo);
    EXPECT_EQ(d.stroke_max[i], s.stroke_hi);
  }
  EXPECT_EQ(d.motor_vmax, 1000.0);
  EXPECT_EQ(d.motor_amax, 15000.0);
}
