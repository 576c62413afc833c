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

#include <cmath>

#include "hlu/error.hpp"
#include "hlu/linalg.hpp"
#include "hlu/simulation.hpp"
#include "test_util.hpp"

using namespace hlu;
using hlu::fx::kPi;

namespace {

PauliRep diag_hamiltonian(double x, double y, double z) {
  PauliRep p;
  p.m = Vector3(x, y, z).asDiagonal();
  return p;
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

TEST(Classify, Classes) {
  EXPECT_EQ(classify(PauliRep{}), SymmetryClass::kZero);
  EXPECT_EQ(classify(diag_hamiltonian(1, 1, 0)), SymmetryClass::kSymmetric);
  PauliRep a;
  a.m(0, 1) = 1;
  a.m(1, 0) = -1;
  EXPECT_EQ(classify(a), SymmetryClass::kAntisymmetric);
  a.m(2, 2) = 1;
  EXPECT_EQ(classify(a), SymmetryClass::kMixed);
}

TEST(Linalg, PhaseInvariantDistance) {
  auto g = fx::rng(40);
  const Matrix4c u = fx::random_unitary4(g);
  EXPECT_LT(phase_invariant_distance(u, std::exp(cplx(0, 1.3)) * u), 1e-14);
  EXPECT_GT(phase_invariant_distance(u, fx::random_unitary4(g)), 0.1);
  EXPECT_NEAR(gate_fidelity(u, -u), 1.0, 1e-14);
}

TEST(Linalg, ExpmMatchesOracle) {
  const Vector3 l(0.3, -0.2, 0.7);
  const Matrix4c h = from_pauli(diag_hamiltonian(l(0), l(1), l(2)));
  EXPECT_LT((expm_hermitian(h, 1.0) - fx::canonical_oracle(l)).norm(), 1e-13);
  const Matrix4c u = expm_hermitian(h, 0.01);
  EXPECT_LT((matrix_power(u, 100) - expm_hermitian(h, 1.0)).norm(), 1e-12);
}

TEST(Protocol, PulsesCloseTheFrame) {
  auto g = fx::rng(41);
  HluProtocol p;
  p.overhead = 1;
  for (int k = 0; k < 4; ++k) p.steps.push_back({random_su2(g), 0.25});
  SU2Element total;
  for (const auto& w : p.pulses()) total = w * total;
  EXPECT_TRUE(total.same_conjugation(SU2Element::identity(), 1e-12));
}

TEST(Protocol, SchemaChecks) {
  HluProtocol p;
  p.overhead = 1;
  p.steps.push_back({SU2Element(), 0.6});
  EXPECT_EQ(reason_of([&] { p.validate(); }), Reason::kSchema);
  p.steps.push_back({SU2Element(), -0.1});
  p.steps.push_back({SU2Element(), 0.5});
  EXPECT_EQ(reason_of([&] { p.validate(); }), Reason::kSchema);
}

TEST(Compile, CnotExample) {
  const PauliRep xy = diag_hamiltonian(1, 1, 0);
  const PauliRep target = diag_hamiltonian(kPi / 4, kPi / 2, kPi / 2);
  const HluProtocol p = compile_simulation(xy, target);
  EXPECT_NEAR(p.overhead, 5 * kPi / 8, 1e-14);
  EXPECT_EQ(p.steps.size(), 3u);
  EXPECT_LT(max_abs_diff(effective_hamiltonian(p, xy), target), 1e-13);
  const auto r = verify(p, xy, fx::canonical_oracle(Vector3(kPi / 4, kPi / 2, kPi / 2)), 1.0, 256);
  EXPECT_LT(r.distance, 1e-10);
}

// The textbook CNOT pulse sequence: pi/2 turns about x and
// y for 1/5 of the slice each, free evolution for 3/5.
TEST(Compile, TextbookCnotSequenceRealisesPermutedTarget) {
  const PauliRep xy = diag_hamiltonian(1, 1, 0);
  HluProtocol p;
  p.overhead = 5 * kPi / 8;
  p.steps = {{SU2Element::rotation(Vector3::UnitX(), kPi / 2), 0.2},
             {SU2Element::rotation(Vector3::UnitY(), kPi / 2), 0.2},
             {SU2Element(), 0.6}};
  const PauliRep eff = effective_hamiltonian(p, xy);
  EXPECT_LT(max_abs_diff(eff, diag_hamiltonian(kPi / 2, kPi / 2, kPi / 4)), 1e-13);
  EXPECT_GT(max_abs_diff(eff, diag_hamiltonian(kPi / 4, kPi / 2, kPi / 2)), 0.1);
}

TEST(Compile, SourceEqualsTarget) {
  auto g = fx::rng(42);
  PauliRep h;
  h.m = fx::random_symmetric(g);
  h.m += 3 * Matrix3::Identity();  // keep the trace positive
  const HluProtocol p = compile_simulation(h, h);
  EXPECT_NEAR(p.overhead, 1.0, 1e-12);
  EXPECT_LT(max_abs_diff(effective_hamiltonian(p, h), h), 1e-12);
}

TEST(Compile, IsotropicFixedPoint) {
  const PauliRep heis = diag_hamiltonian(1, 1, 1);
  EXPECT_EQ(reason_of([&] { compile_simulation(heis, diag_hamiltonian(0, 0, 1)); }),
            Reason::kIsotropicFixedPoint);
  const HluProtocol p = compile_simulation(heis, diag_hamiltonian(2.5, 2.5, 2.5));
  EXPECT_NEAR(p.overhead, 2.5, 1e-14);
}

TEST(Compile, MajorizationViolation) {
  EXPECT_EQ(reason_of([] { compile_simulation(diag_hamiltonian(1, 1, 0), diag_hamiltonian(1, 0, 0)); }),
            Reason::kMajorizationViolated);
}

TEST(Compile, TraceSignMismatch) {
  EXPECT_EQ(reason_of([] { compile_simulation(diag_hamiltonian(1, 1, 0), diag_hamiltonian(-1, 0, 0)); }),
            Reason::kTraceSignMismatch);
}

TEST(Compile, UnequalTargetLocals) {
  PauliRep t = diag_hamiltonian(1, 0, 0);
  t.local_a = Vector3(0, 0, 1);
  EXPECT_EQ(reason_of([&] { compile_simulation(diag_hamiltonian(1, 1, 1), t); }),
            Reason::kUnequalLocalTerms);
}

TEST(Compile, ZeroTargetIsTrivial) {
  const HluProtocol p = compile_simulation(diag_hamiltonian(1, 2, 3), PauliRep{});
  EXPECT_EQ(p.overhead, 0.0);
  EXPECT_LT(phase_invariant_distance(execute(p, diag_hamiltonian(1, 2, 3), 1.0, 8),
                                     Matrix4c::Identity()),
            1e-15);
}

// With local fields the slices no longer commute: the product formula is
// first order and halving the slice halves the error.
TEST(Compile, LocalTermsFirstOrder) {
  PauliRep src = diag_hamiltonian(1, 1, 0);
  src.local_a = src.local_b = Vector3(0, 0, 0.8);
  PauliRep tgt = diag_hamiltonian(0.4, 0.3, 0.3);
  tgt.local_a = tgt.local_b = Vector3(0.5, 0, 0);
  const HluProtocol p = compile_simulation(src, tgt);
  EXPECT_LT(max_abs_diff(effective_hamiltonian(p, src), tgt), 1e-13);
  const Matrix4c ideal = expm_hermitian(from_pauli(tgt), 1.0);
  const double d1 = verify(p, src, ideal, 1.0, 512).distance;
  const double d2 = verify(p, src, ideal, 1.0, 1024).distance;
  EXPECT_GT(d1, 1e-8);
  EXPECT_NEAR(d1 / d2, 2.0, 0.3);
}

TEST(Compile, MixedSourceProjectsFirst) {
  auto g = fx::rng(43);
  for (int t = 0; t < 20; ++t) {
    PauliRep src = fx::random_pauli(g);
    src.m += 4 * Matrix3::Identity();
    src.alpha = 0;
    PauliRep tgt;
    // Target from a doubly stochastic mix of the projected spectrum.
    const Matrix3 ms = 0.5 * (src.m + src.m.transpose());
    tgt.m = Matrix3(Vector3::Constant(ms.trace() / 3).asDiagonal()) * 0.5;
    tgt.local_a = tgt.local_b = fx::random_vec(g);
    const HluProtocol p = compile_simulation(src, tgt);
    EXPECT_LT(max_abs_diff(effective_hamiltonian(p, src), tgt), 1e-11);
  }
}

TEST(Compile, MixedSourceFirstOrder) {
  PauliRep src = diag_hamiltonian(1.2, 0.7, -0.1);
  src.m(0, 1) = 0.4;
  src.m(1, 0) = -0.2;
  src.m(0, 2) = 0.3;
  const PauliRep tgt = diag_hamiltonian(0.5, 0.5, 0.4);
  const HluProtocol p = compile_simulation(src, tgt);
  const Matrix4c ideal = expm_hermitian(from_pauli(tgt), 1.0);
  const double d1 = verify(p, src, ideal, 1.0, 1024).distance;
  const double d2 = verify(p, src, ideal, 1.0, 2048).distance;
  EXPECT_GT(d1, 1e-8);
  EXPECT_NEAR(d1 / d2, 2.0, 0.3);
}

}  // namespace
