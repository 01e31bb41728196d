#include "orthoglide/error.hpp"
#include "orthoglide/performance.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace orthoglide;
using namespace orthoglide::testing;

namespace {

InverseJacobian diagonal_pose_matrix(double a) {
  InverseJacobian j;
  j.m = Eigen::Matrix3d::Constant(a);
  j.m.diagonal().setOnes();
  return j;
}

Eigen::Matrix3d random_matrix(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::Matrix3d m;
  for (int i = 0; i < 9; ++i) m.data()[i] = g(rng);
  return m;
}

}  // namespace

TEST(Svd3, AgreesWithEigenOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    const Eigen::Matrix3d m = random_matrix(rng, std::pow(10.0, n % 7 - 3));
    const Svd3 mine = svd3(m);
    const Eigen::Vector3d ref = eigen_singular_values(m);
    EXPECT_LE((mine.values - ref).norm(), 1e-13 * ref[0]);
    EXPECT_LE((mine.v.transpose() * mine.v - Eigen::Matrix3d::Identity()).norm(), 1e-13);
    EXPECT_LE((mine.u * mine.values.asDiagonal() * mine.v.transpose() - m).norm(), 1e-13 * ref[0]);
  }
}

TEST(Svd3, RankDeficientInput) {
  Eigen::Matrix3d m;
  m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  const Svd3 s = svd3(m);
  EXPECT_LE(s.values[2], 1e-14 * s.values[0]);
  EXPECT_LE((s.u * s.values.asDiagonal() * s.v.transpose() - m).norm(), 1e-13);
}

TEST(TransmissionFactors, IdentityIsIsotropic) {
  const TransmissionReport r = transmission_factors(InverseJacobian{});
  for (double s : r.sigma_fwd) EXPECT_DOUBLE_EQ(s, 1.0);
  EXPECT_DOUBLE_EQ(r.kappa, 1.0);
  EXPECT_DOUBLE_EQ(r.det_inv, 1.0);
  EXPECT_FALSE(r.parallel_flag);
  EXPECT_FALSE(r.singular());
}

TEST(TransmissionFactors, DiagonalPoseSpectrum) {
  // Spectrum of (J^-1)^T J^-1 from a dense eigen-decomposition, independent of svd3.
  struct Case {
    double a;
    std::array<double, 3> sigma_fwd;
    double kappa;
  };
  for (const Case& c : {Case{0.5, {0.5, 2.0, 2.0}, 0.25}, Case{-0.25, {0.8, 0.8, 2.0}, 0.4}}) {
    const InverseJacobian j = diagonal_pose_matrix(c.a);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(j.m.transpose() * j.m);
    const Eigen::Vector3d oracle = es.eigenvalues().cwiseSqrt().cwiseInverse();  // descending
    const TransmissionReport r = transmission_factors(j);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(r.sigma_fwd[k], c.sigma_fwd[k], 1e-12) << "a=" << c.a;
      EXPECT_NEAR(r.sigma_fwd[k], oracle[2 - k], 1e-12);
    }
    EXPECT_NEAR(r.kappa, c.kappa, 1e-12);
  }
}

TEST(TransmissionFactors, SingularInputProducesFlags) {
  const InverseJacobian j = diagonal_pose_matrix(-0.5);  // 1 + 2a = 0
  const TransmissionReport r = transmission_factors(j);
  EXPECT_TRUE(r.parallel_flag);
  EXPECT_TRUE(std::isinf(r.sigma_fwd[2]));
  EXPECT_NEAR(r.sigma_fwd[0], 1.0 / 1.5, 1e-12);
  EXPECT_DOUBLE_EQ(r.kappa, 0.0);
  EXPECT_TRUE(r.singular());
}

TEST(TransmissionFactors, SerialFlagFromRowNorm) {
  InverseJacobian j;
  j.m(0, 1) = 1e10;  // eta_1 / L ~ 1e-10
  const TransmissionReport r = transmission_factors(j);
  EXPECT_TRUE(r.serial_flags[0]);
  EXPECT_FALSE(r.serial_flags[1]);
  EXPECT_FALSE(r.serial_flags[2]);
}

TEST(ConditionNumber, Examples) {
  EXPECT_DOUBLE_EQ(condition_number(InverseJacobian{}), 1.0);
  EXPECT_NEAR(condition_number(diagonal_pose_matrix(0.5)), 0.25, 1e-14);
  InverseJacobian rank2;
  rank2.m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  EXPECT_EQ(condition_number(rank2), 0.0);
  EXPECT_EQ(condition_number(InverseJacobian{Eigen::Matrix3d::Zero()}), 0.0);
}

TEST(ConditionNumber, InvariantUnderInversionAndScaling) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const Eigen::Matrix3d m = random_matrix(rng);
    const double k = condition_number(InverseJacobian{m});
    ASSERT_GT(k, 1e-6);
    EXPECT_NEAR(condition_number(InverseJacobian{m.inverse()}), k, 1e-10 * std::max(1.0, 1.0 / k));
    EXPECT_NEAR(condition_number(InverseJacobian{-3.7 * m}), k, 1e-14);
    EXPECT_GE(k, 0.0);
    EXPECT_LE(k, 1.0);
  }
}

TEST(TransmissionFactors, ReciprocityWithForwardMap) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 200; ++n) {
    const Eigen::Matrix3d m = Eigen::Matrix3d::Identity() + 0.3 * random_matrix(rng);
    const TransmissionReport r = transmission_factors(InverseJacobian{m});
    const Eigen::Vector3d fwd = eigen_singular_values(m.inverse());  // descending
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(r.sigma_fwd[k] / fwd[2 - k], 1.0, 1e-12);
  }
}

TEST(TransmissionFactors, DiagonalPoseMatchesGenericDecomposition) {
  const auto d = proto_design();
  const double L = d.leg_length;
  for (double u = -100.0; u <= 150.0; u += 12.5) {
    const double a = u / std::sqrt(L * L - 2 * u * u);
    const InverseJacobian j = inverse_jacobian(ToolPose(u, u, u), d);
    const TransmissionReport r = transmission_factors(j);
    std::array<double, 3> closed{1 / (1 + 2 * a), 1 / (1 - a), 1 / (1 - a)};
    std::sort(closed.begin(), closed.end());
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(r.sigma_fwd[k], closed[k], 1e-10);
    EXPECT_NEAR(r.det_inv, (1 - a) * (1 - a) * (1 + 2 * a), 1e-10);
    EXPECT_LE(r.kappa, 1.0);
    if (u != 0.0) EXPECT_LT(r.kappa, 1.0);
  }
}

TEST(IsotropyResidual, ZeroAtOrigin) {
  const auto d = proto_design();
  const IsotropyResidual r = isotropy_residual(ToolPose(0, 0, 0), d);
  EXPECT_EQ(r.ratio_dev, 0.0);
  EXPECT_EQ(r.ratio_spread, 0.0);
  EXPECT_EQ(r.ortho_dev, 0.0);
  EXPECT_TRUE(r.isotropic());
  const TransmissionReport t = transmission_factors(inverse_jacobian(ToolPose(0, 0, 0), d));
  for (double s : t.sigma_fwd) EXPECT_NEAR(s, 1.0, 1e-9);
}

TEST(IsotropyResidual, ReferencePointQ2) {
  // Legs (eta, u, u), (u, eta, u), (u, u, eta) with eta = 2u and |leg| = L:
  // cos = (2 u eta + u^2) / L^2, ratio L / eta on every leg.
  const auto d = proto_design();
  const double u = kProtoU2, eta = 2.0 * kProtoU2, L = kProtoLeg;
  const IsotropyResidual r = isotropy_residual(ToolPose(u, u, u), d);
  EXPECT_NEAR(r.ratio_spread, 0.0, 1e-12);
  EXPECT_NEAR(r.ratio_dev, L / eta - 1.0, 1e-12);
  EXPECT_NEAR(r.ortho_dev, (2 * u * eta + u * u) / (L * L), 1e-12);
  EXPECT_NEAR(r.ortho_dev, 5.0 / 6.0, 1e-12);
  EXPECT_FALSE(r.isotropic());
}

TEST(IsotropyResidual, OffAxisPose) {
  const double L = 310.58;
  const auto d = DesignParams::with_leg_length(L);
  const IsotropyResidual r = isotropy_residual(ToolPose(50, 0, 0), d);
  // Legs (L, 0, 0), (50, eta, 0), (50, 0, eta): the worst pair is leg 1
  // against either tilted leg, cos = 50 L / L^2.
  const double eta = std::sqrt(L * L - 50.0 * 50.0);
  EXPECT_NEAR(r.ratio_dev, L / eta - 1.0, 1e-12);
  EXPECT_NEAR(r.ortho_dev, 50.0 / L, 1e-12);
  EXPECT_GT(r.ratio_dev, 0.0);
  EXPECT_GT(r.ortho_dev, 0.0);
}

TEST(IsotropyResidual, UnreachablePropagates) {
  const auto d = DesignParams::with_leg_length(100.0);
  EXPECT_THROW(isotropy_residual(ToolPose(0, 90, 90), d), Error);
}

TEST(ManipulabilityEllipsoid, UnitSphereAtIdentity) {
  const Ellipsoid e = manipulability_ellipsoid(InverseJacobian{});
  for (double s : e.semi_axes) EXPECT_DOUBLE_EQ(s, 1.0);
}

TEST(ManipulabilityEllipsoid, DiagonalPoseAxes) {
  const Ellipsoid e = manipulability_ellipsoid(diagonal_pose_matrix(0.5));
  EXPECT_NEAR(e.semi_axes[0], 0.5, 1e-12);
  EXPECT_NEAR(e.semi_axes[1], 2.0, 1e-12);
  EXPECT_NEAR(e.semi_axes[2], 2.0, 1e-12);
  const Eigen::Vector3d diag = Eigen::Vector3d::Ones().normalized();
  EXPECT_NEAR(std::abs(e.directions.col(0).dot(diag)), 1.0, 1e-12);
  EXPECT_NEAR(e.directions.col(1).dot(diag), 0.0, 1e-12);
  EXPECT_NEAR(e.directions.col(2).dot(diag), 0.0, 1e-12);
}

TEST(ManipulabilityEllipsoid, AxesAreImagesOfTheUnitSphere) {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 200; ++n) {
    const Eigen::Matrix3d m = Eigen::Matrix3d::Identity() + 0.4 * random_matrix(rng);
    const Ellipsoid e = manipulability_ellipsoid(InverseJacobian{m});
    EXPECT_LE((e.directions.transpose() * e.directions - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_NEAR(e.semi_axes[0] * e.semi_axes[1] * e.semi_axes[2], 1.0 / std::abs(m.determinant()),
                1e-10 / std::abs(m.determinant()));
    // Joint speed needed to move the tool along axis k at speed semi_axes[k] is unit.
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR((m * (e.semi_axes[k] * e.directions.col(k))).norm(), 1.0, 1e-10);
    }
  }
}

TEST(ManipulabilityEllipsoid, SingularThrows) {
  try {
    manipulability_ellipsoid(diagonal_pose_matrix(-0.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParallelSingularity);
  }
}
