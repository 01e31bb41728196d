#include "orthoglide/kinematics.hpp"
#include "orthoglide/performance.hpp"
#include "orthoglide/synthesis.hpp"

#include <benchmark/benchmark.h>

using namespace orthoglide;

namespace {

const SynthesisResult& proto() {
  static const SynthesisResult s = synthesize(200.0, Bounds{0.5, 2.0});
  return s;
}

const ToolPose kPose(37.0, -12.5, 80.0);

}  // namespace

static void BM_InverseKinematics(benchmark::State& state) {
  const DesignParams d = to_design(proto());
  for (auto _ : state) benchmark::DoNotOptimize(inverse_kinematics(kPose, d));
}
BENCHMARK(BM_InverseKinematics);

static void BM_ForwardKinematics(benchmark::State& state) {
  const DesignParams d = to_design(proto());
  const JointVector rho = inverse_kinematics(kPose, d).joints;
  for (auto _ : state) benchmark::DoNotOptimize(forward_kinematics(rho, d));
}
BENCHMARK(BM_ForwardKinematics);

static void BM_InverseJacobian(benchmark::State& state) {
  const DesignParams d = to_design(proto());
  for (auto _ : state) benchmark::DoNotOptimize(inverse_jacobian(kPose, d));
}
BENCHMARK(BM_InverseJacobian);

static void BM_TransmissionFactors(benchmark::State& state) {
  const DesignParams d = to_design(proto());
  const InverseJacobian j = inverse_jacobian(kPose, d);
  for (auto _ : state) benchmark::DoNotOptimize(transmission_factors(j, d.tol));
}
BENCHMARK(BM_TransmissionFactors);

static void BM_Svd3(benchmark::State& state) {
  const DesignParams d = to_design(proto());
  const Eigen::Matrix3d m = inverse_jacobian(kPose, d).m;
  for (auto _ : state) benchmark::DoNotOptimize(svd3(m));
}
BENCHMARK(BM_Svd3);
