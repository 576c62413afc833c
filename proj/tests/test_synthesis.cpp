// Copyright 2026 The hlu-compiler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "hlu/error.hpp"
#include "hlu/gate.hpp"
#include "hlu/linalg.hpp"
#include "hlu/synthesis.hpp"
#include "test_util.hpp"

using namespace hlu;
using hlu::fx::kPi;

namespace {

PauliRep diag_hamiltonian(double x, double y, double z) {
  PauliRep p;
  p.m = Vector3(x, y, z).asDiagonal();
  return p;
}

Matrix4c cnot() {
  Matrix4c u = Matrix4c::Zero();
  u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1;
  return u;
}

Reason reason_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const HluError& e) {
    return e.reason();
  }
  ADD_FAILURE() << "no error raised";
  return Reason::kInfeasible;
}

// Exhaustive grid with the hull oracle. For a source with non-zero trace
// the overhead of a candidate is its trace ratio.
double brute_min_overhead(const Vector3& lp, const Vector3& src, int w) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vector3& p : fx::permuted(lp))
    for (int a = -w; a <= w; ++a)
      for (int b = -w; b <= w; ++b)
        for (int c = -w; c <= w; ++c) {
          const Vector3 x = p + (kPi / 2) * Vector3(a, b, c);
          const double ratio = x.sum() / src.sum();
          if (ratio < 0) continue;
          if (fx::hull_contains(x, ratio * src)) best = std::min(best, ratio);
        }
  return best;
}

TEST(ShiftSearch, CnotFromXY) {
  const ShiftChoice s = shift_search(Vector3(kPi / 4, 0, 0), Vector3(1, 1, 0));
  EXPECT_NEAR(s.overhead, 5 * kPi / 8, 1e-12);
  EXPECT_EQ(s.shift, ShiftVector(0, 1, 1));
  EXPECT_EQ(s.perm, Permutation::identity());
}

TEST(ShiftSearch, MatchesBruteForce) {
  auto g = fx::rng(60);
  std::uniform_real_distribution<double> u(0.0, kPi / 4);
  for (int t = 0; t < 15; ++t) {
    Vector3 l(u(g), u(g), u(g));
    std::sort(l.data(), l.data() + 3, std::greater<>());
    const Vector3 src = Vector3(1.0, 0.4 + 0.5 * u(g), 0.1 * u(g));
    const ShiftChoice s = shift_search(l, src);
    EXPECT_NEAR(s.overhead, brute_min_overhead(l, src, 3), 1e-9);
    EXPECT_TRUE(fx::hull_contains(s.target, s.overhead * src));
  }
}

TEST(ShiftSearch, IsotropicObstruction) {
  EXPECT_EQ(reason_of([] { shift_search(Vector3(kPi / 4, 0, 0), Vector3(1, 1, 1)); }),
            Reason::kIsotropicFixedPoint);
  const ShiftChoice s = shift_search(Vector3::Constant(kPi / 8), Vector3(1, 1, 1));
  EXPECT_NEAR(s.overhead, kPi / 8, 1e-14);
  EXPECT_EQ(s.shift, ShiftVector::Zero());
}

TEST(ShiftSearch, TracelessSource) {
  // A traceless source needs a traceless shifted target.
  const Vector3 src(1, -1, 0);
  const ShiftChoice s = shift_search(Vector3(kPi / 4, kPi / 4, 0), src);
  EXPECT_NEAR(s.target.sum(), 0.0, 1e-12);
  EXPECT_NEAR(s.overhead, fx::traceless_overhead_oracle(src, s.target), 1e-8);
}

TEST(Synthesize, SymmetricGateFromHeisenberg) {
  const Matrix4c u = canonical_gate(Vector3::Constant(kPi / 8));
  const SynthesisPlan plan = synthesize_gate(u, diag_hamiltonian(1, 1, 1));
  EXPECT_NEAR(plan.overhead, kPi / 8, 1e-14);
  EXPECT_EQ(plan.inhomogeneous_layers(), 0);
  EXPECT_LT(verify_plan(plan, diag_hamiltonian(1, 1, 1), 16).distance, 1e-12);
}

TEST(Synthesize, RandomSymmetricGates) {
  auto g = fx::rng(61);
  const PauliRep src = diag_hamiltonian(1, 0.6, 0.2);
  for (int t = 0; t < 20; ++t) {
    const Matrix4c u = homogeneous(random_su2(g)) * canonical_gate(fx::random_vec(g)) *
                       homogeneous(random_su2(g));
    const SynthesisPlan plan = synthesize_gate(u, src);
    EXPECT_EQ(plan.inhomogeneous_layers(), 0);
    EXPECT_LT(phase_invariant_distance(u, plan.ideal()), 1e-9);
    EXPECT_LT(verify_plan(plan, src, 64).distance, 1e-9);
  }
}

TEST(Synthesize, RotatedSourceFrame) {
  auto g = fx::rng(62);
  PauliRep src;
  const SO3Rotation r = su2_to_so3(random_su2(g));
  src.m = r.matrix() * Vector3(1, 0.5, 0.2).asDiagonal() * r.matrix().transpose();
  const Matrix4c u = canonical_gate(Vector3(0.5, 0.3, 0.1));
  const SynthesisPlan plan = synthesize_gate(u, src);
  EXPECT_LT(verify_plan(plan, src, 64).distance, 1e-9);
}

TEST(Synthesize, AsymmetricGateNeedsHybrid) {
  EXPECT_EQ(reason_of([] { synthesize_gate(cnot(), diag_hamiltonian(1, 1, 0)); }),
            Reason::kAsymmetricGate);
}

TEST(Hybrid, CnotFromXY) {
  const PauliRep xy = diag_hamiltonian(1, 1, 0);
  const SynthesisPlan plan = hybrid_plan(cnot(), xy);
  EXPECT_NEAR(plan.overhead, 5 * kPi / 8, 1e-12);
  EXPECT_EQ(plan.shift, ShiftVector(0, 1, 1));
  EXPECT_EQ(plan.inhomogeneous_layers(), 2);
  EXPECT_LT(verify_plan(plan, xy, 64).distance, 1e-10);
}

TEST(Hybrid, CnotFromHeisenbergComposes) {
  const PauliRep heis = diag_hamiltonian(1, 1, 1);
  const SynthesisPlan plan = hybrid_plan(cnot(), heis);
  EXPECT_EQ(plan.repetitions, 2);
  EXPECT_NEAR(plan.overhead, kPi / 4, 1e-14);
  EXPECT_LT(verify_plan(plan, heis, 16).distance, 1e-10);
}

TEST(Hybrid, HeisenbergCannotReachGenericGates) {
  EXPECT_EQ(reason_of([] {
              hybrid_plan(canonical_gate(Vector3(0.5, 0.2, 0.1)), diag_hamiltonian(1, 1, 1));
            }),
            Reason::kIsotropicFixedPoint);
}

TEST(Hybrid, RandomGatesWithLocalSource) {
  auto g = fx::rng(63);
  PauliRep src = diag_hamiltonian(1, 0.7, 0.1);
  src.local_a = src.local_b = Vector3(0.2, 0, 0.3);
  for (int t = 0; t < 5; ++t) {
    const Matrix4c u = fx::random_unitary4(g);
    const SynthesisPlan plan = hybrid_plan(u, src);
    EXPECT_LE(plan.inhomogeneous_layers(), 2);
    EXPECT_LT(phase_invariant_distance(u, plan.ideal()), 1e-9);
    const double d1 = verify_plan(plan, src, 512).distance;
    const double d2 = verify_plan(plan, src, 1024).distance;
    EXPECT_LT(d2, d1);
  }
}

}  // namespace
