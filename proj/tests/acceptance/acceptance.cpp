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

// Acceptance run: one PASS/FAIL line per criterion, with measured values and
// wall time. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hlu/antisym.hpp"
#include "hlu/error.hpp"
#include "hlu/gate.hpp"
#include "hlu/linalg.hpp"
#include "hlu/multiqubit.hpp"
#include "hlu/projection.hpp"
#include "hlu/simulation.hpp"
#include "hlu/spectral.hpp"
#include "hlu/synthesis.hpp"
#include "test_util.hpp"

using namespace hlu;
using hlu::fx::kPi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

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

template <class... T>
std::string fmt(const char* f, T... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// c sum_k p_k P_k source == target, the check shared by the compiled and the
// reference mixing (1/5, 1/5, 3/5).
double mixing_residual(const std::vector<std::pair<double, Vector3>>& terms, double c,
                       const Vector3& target) {
  Vector3 sum = Vector3::Zero();
  for (const auto& [p, v] : terms) sum += p * v;
  return (c * sum - target).cwiseAbs().maxCoeff();
}

// First-order convergence of d(n) -> d(2n), or both at the rounding floor
// (slices that commute carry no product-formula error).
bool first_order(double d1, double d2, std::string& note) {
  constexpr double kFloor = 1e-11;
  if (d1 <= kFloor && d2 <= kFloor) {
    note = "exact to rounding";
    return true;
  }
  const double ratio = d1 / d2;
  note = fmt("ratio %.3f", ratio);
  return std::abs(ratio - 2.0) <= 0.3;
}

Outcome c1_cnot_cost() {
  const SynthesisPlan plan = hybrid_plan(cnot(), diag_hamiltonian(1, 1, 0));
  const double err = std::abs(plan.overhead - 5 * kPi / 8);
  const bool ok = err <= 1e-12 && plan.shift == ShiftVector(0, 1, 1);
  return {ok, fmt("c = %.17g (|c - 5pi/8| = %.2e), n = (%d, %d, %d)", plan.overhead, err,
                  plan.shift(0), plan.shift(1), plan.shift(2))};
}

Outcome c2_mixing() {
  const Vector3 src(1, 1, 0), tgt(kPi / 4, kPi / 2, kPi / 2);
  const double c = 5 * kPi / 8;
  const HluProtocol proto = compile_simulation(diag_hamiltonian(1, 1, 0), diag_hamiltonian(tgt(0), tgt(1), tgt(2)));
  const PermutationMixing mix = construct_mixing(src, tgt, c);
  std::vector<std::pair<double, Vector3>> compiled;
  for (const auto& t : mix.terms) compiled.emplace_back(t.weight, t.perm.apply(src));
  const double r_compiled = mixing_residual(compiled, c, tgt);
  const double r_protocol =
      (effective_hamiltonian(proto, diag_hamiltonian(1, 1, 0)).m - Matrix3(tgt.asDiagonal())).cwiseAbs().maxCoeff();
  const std::vector<std::pair<double, Vector3>> reference = {
      {0.2, Vector3(1, 1, 0)}, {0.2, Vector3(1, 0, 1)}, {0.6, Vector3(0, 1, 1)}};
  const double r_reference = mixing_residual(reference, c, tgt);
  std::string weights;
  for (const auto& t : mix.terms) weights += fmt(" %.4f*%s", t.weight, t.perm.name().c_str());
  const bool ok = r_compiled <= 1e-9 && r_protocol <= 1e-9 && r_reference <= 1e-9;
  return {ok, fmt("compiled residual %.1e (protocol %.1e), reference weights residual %.1e; mixing:%s",
                  r_compiled, r_protocol, r_reference, weights.c_str())};
}

Outcome c3_trotter() {
  const PauliRep xy = diag_hamiltonian(1, 1, 0);
  const HluProtocol p = compile_simulation(xy, diag_hamiltonian(kPi / 4, kPi / 2, kPi / 2));
  const Matrix4c target = canonical_gate(Vector3(kPi / 4, kPi / 2, kPi / 2));
  const double d4 = verify(p, xy, target, 1.0, 4096).distance;
  const double d8 = verify(p, xy, target, 1.0, 8192).distance;
  const double ratio = d4 / d8;
  const bool ok = d8 <= 5e-3 && std::abs(ratio - 2.0) <= 0.3;
  std::string why;
  if (!ok && d8 <= 5e-3)
    why = "; every slice term is a sum of xx, yy, zz, which commute, so the product formula is "
          "exact and the ratio is rounding noise";
  return {ok, fmt("d(4096) = %.3e, d(8192) = %.3e, ratio = %.3f%s", d4, d8, ratio, why.c_str())};
}

Outcome c4_kak() {
  auto g = fx::rng(400);
  double worst = 0;
  int normal = 0, oracle = 0;
  for (int t = 0; t < 100; ++t) {
    const Matrix4c u = fx::random_unitary4(g);
    const GateDecomposition d = kak_decompose(u);
    worst = std::max(worst, phase_invariant_distance(u, d.reassemble()));
    normal += fx::in_normal_form(d.canonical, d.homogeneous);
    oracle += fx::eigenphase_oracle_agrees(u, d.canonical);
  }
  const GateDecomposition dc = kak_decompose(cnot());
  const GateDecomposition ds = kak_decompose(swap_operator());
  const double ec = (dc.canonical - Vector3(kPi / 4, 0, 0)).cwiseAbs().maxCoeff();
  const double es = (ds.canonical - Vector3::Constant(kPi / 4)).cwiseAbs().maxCoeff();
  const bool swap_oracle = fx::eigenphase_oracle_agrees(swap_operator(), Vector3::Constant(kPi / 4));
  const bool ok = worst <= 1e-9 && normal == 100 && oracle == 100 && ec <= 1e-10 && es <= 1e-10 &&
                  swap_oracle;
  return {ok, fmt("max reassembly %.1e, normal form %d/100, eigenphase oracle %d/100, "
                  "CNOT err %.1e, SWAP err %.1e, SWAP oracle %s",
                  worst, normal, oracle, ec, es, swap_oracle ? "agrees" : "disagrees")};
}

Outcome c5_majorization() {
  auto g = fx::rng(500);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int agree = 0, inside = 0;
  for (int t = 0; t < 200; ++t) {
    const Vector3 y = fx::random_vec(g);
    Vector3 x;
    if (t % 2 == 0) {  // random point of the permutohedron, sometimes pushed out
      const auto pts = fx::permuted(y);
      std::array<double, 6> w;
      double total = 0;
      for (double& v : w) total += (v = u(g));
      x.setZero();
      for (int k = 0; k < 6; ++k) x += (w[k] / total) * pts[k];
      if (t % 4 == 0) x = y.mean() * Vector3::Ones() + 1.8 * (x - y.mean() * Vector3::Ones());
    } else {
      x = fx::random_vec(g);
      x.array() += (y.sum() - x.sum()) / 3.0;
    }
    const bool want = fx::hull_contains(x, y);
    inside += want;
    agree += majorizes(x, y) == want;
  }
  return {agree == 200, fmt("agreement %d/200 (%d majorized, %d not)", agree, inside, 200 - inside)};
}

Outcome c6_isotropic() {
  auto g = fx::rng(600);
  const PauliRep heis = diag_hamiltonian(1, 1, 1);
  int rejected = 0;
  for (int t = 0; t < 50; ++t) {
    PauliRep tgt;
    tgt.m = fx::random_symmetric(g);
    try {
      compile_simulation(heis, tgt);
    } catch (const HluError& e) {
      rejected += e.is_infeasible();
    }
  }
  int proportional = 0;
  double worst = 0;
  for (double a : {0.1, 0.5, 1.0, 2.5, 7.0}) {
    const HluProtocol p = compile_simulation(heis, diag_hamiltonian(a, a, a));
    worst = std::max(worst, std::abs(p.overhead - a));
    proportional += std::abs(p.overhead - a) <= 1e-12;
  }
  return {rejected == 50 && proportional == 5,
          fmt("rejected %d/50 non-proportional, proportional %d/5 (max |c - ratio| %.1e)", rejected,
              proportional, worst)};
}

Outcome c7_antisym() {
  auto g = fx::rng(700);
  const Vector3 v(0.3, -0.2, 0.9);
  PauliRep h;
  h.m = antisymmetric_from_vector(v);

  const HluProtocol rev = compile_simulation(h, h * -1.0);
  const Matrix4c rev_target = expm_hermitian(from_pauli(h * -1.0), 1.0);
  const double r1 = verify(rev, h, rev_target, 1.0, 64).distance;
  const double r2 = verify(rev, h, rev_target, 1.0, 128).distance;

  const HluProtocol zero = mixing_to_protocol(
      [&] {
        Mixing m;
        for (const auto& t : construct_rotation_mixing(v, Vector3::Zero(), 1.0))
          m.push_back({t.weight, so3_to_su2(t.rotation)});
        return m;
      }(),
      1.0);
  const double z1 = verify(zero, h, Matrix4c::Identity(), 1.0, 64).distance;
  const double z2 = verify(zero, h, Matrix4c::Identity(), 1.0, 128).distance;

  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const Vector3 a = fx::random_vec(g), b = fx::random_vec(g);
    worst = std::max(worst, std::abs(antisym_overhead(a, b) - b.norm() / a.norm()));
  }
  std::string n1, n2;
  const bool ok = std::abs(rev.overhead - 1.0) <= 1e-14 && first_order(r1, r2, n1) &&
                  zero.steps.size() == 2 && first_order(z1, z2, n2) && worst <= 1e-12;
  return {ok, fmt("reversal c = %.3g, d = %.1e/%.1e (%s); zero: %zu steps, d = %.1e/%.1e (%s); "
                  "max overhead err %.1e",
                  rev.overhead, r1, r2, n1.c_str(), zero.steps.size(), z1, z2, n2.c_str(), worst)};
}

Outcome c8_projection() {
  auto g = fx::rng(800);
  double worst = 0, idem = 0;
  for (int t = 0; t < 50; ++t) {
    const PauliRep p = fx::random_pauli(g);
    const ProjectionResult res = symmetric_projection_mixing(p);
    const PauliRep eff = apply_mixing(p, res.mixing);
    PauliRep want;
    want.alpha = p.alpha;
    want.m = 0.5 * (p.m + p.m.transpose());
    worst = std::max(worst, max_abs_diff(eff, want));
    idem = std::max(idem, max_abs_diff(apply_mixing(eff, res.mixing), eff));
  }
  return {worst <= 1e-10 && idem <= 1e-10,
          fmt("max deviation %.1e, idempotence %.1e over 50 Hamiltonians", worst, idem)};
}

// a (x) b for any sizes, a the more significant factor.
Eigen::MatrixXcd kron_any(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Outcome c9_lift() {
  const PauliRep zz = diag_hamiltonian(0, 0, 1);
  const HluProtocol p = compile_simulation(zz, diag_hamiltonian(1, 1, 1));
  const LiftedSystem sys = multiqubit_lift(CouplingGraph::open_chain(3, zz), p);
  // Heisenberg chain from explicit Kronecker products.
  Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(8, 8);
  for (int k = 1; k <= 3; ++k) {
    const Matrix4c pair = kron(pauli(k), pauli(k));
    const Eigen::MatrixXcd left = kron_any(pair, pauli(0));
    const Eigen::MatrixXcd right = kron_any(pauli(0), pair);
    target += left + right;
  }
  const double err = (sys.effective - target).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd ideal = expm_hermitian(target, 0.5);
  const double d1 = phase_invariant_distance(ideal, sys.execute(0.5, 256));
  const double d2 = phase_invariant_distance(ideal, sys.execute(0.5, 512));
  std::string note;
  const bool conv = d1 > 1e-11 && first_order(d1, d2, note);
  return {err <= 1e-9 && conv,
          fmt("c = %.3g, effective err %.1e, d(256) = %.2e, d(512) = %.2e (%s)", p.overhead, err, d1,
              d2, note.c_str())};
}

Outcome c10_hybrid() {
  auto g = fx::rng(1000);
  const PauliRep xy = diag_hamiltonian(1, 1, 0);
  int two_layers = 0, close = 0, decreasing = 0;
  double worst = 0;
  for (int t = 0; t < 25; ++t) {
    const Matrix4c u = fx::random_unitary4(g);
    const SynthesisPlan plan = hybrid_plan(u, xy);
    two_layers += plan.inhomogeneous_layers() == 2;
    const double d4 = verify_plan(plan, xy, 4096).distance;
    const double d8 = verify_plan(plan, xy, 8192).distance;
    worst = std::max(worst, d8);
    close += d8 <= 1e-2;
    decreasing += d8 < d4 || (d4 <= 1e-9 && d8 <= 1e-9);
  }
  return {two_layers == 25 && close == 25 && decreasing == 25,
          fmt("two inhomogeneous layers %d/25, d(8192) <= 1e-2 %d/25 (max %.1e), "
              "non-increasing or at rounding floor %d/25",
              two_layers, close, worst, decreasing)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "CNOT interaction cost", 1, c1_cnot_cost},
      {2, "CNOT mixing", 1, c2_mixing},
      {3, "end-to-end Trotter check", 30, c3_trotter},
      {4, "KAK correctness", 5, c4_kak},
      {5, "majorization oracle equivalence", 5, c5_majorization},
      {6, "isotropic fixed point", 1, c6_isotropic},
      {7, "antisymmetric suite", 10, c7_antisym},
      {8, "symmetric projection", 5, c8_projection},
      {9, "multi-qubit lift", 10, c9_lift},
      {10, "hybrid universality", 60, c10_hybrid},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s %2d %s: %s [%.3f s, budget %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", over budget");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
