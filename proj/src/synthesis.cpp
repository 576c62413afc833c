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

#include "hlu/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hlu/error.hpp"
#include "hlu/linalg.hpp"
#include "hlu/projection.hpp"
#include "hlu/spectral.hpp"

namespace hlu {

namespace {

constexpr double kPi = std::numbers::pi;

// (c, |n|_1, n, perm) ordering with c compared up to rounding.
bool better(const ShiftChoice& a, const ShiftChoice& b) {
  const double tol = 1e-12 * std::max(1.0, std::abs(b.overhead));
  if (std::abs(a.overhead - b.overhead) > tol) return a.overhead < b.overhead;
  const int na = a.shift.cwiseAbs().sum();
  const int nb = b.shift.cwiseAbs().sum();
  if (na != nb) return na < nb;
  const std::array<int, 3> sa{a.shift(0), a.shift(1), a.shift(2)};
  const std::array<int, 3> sb{b.shift(0), b.shift(1), b.shift(2)};
  if (sa != sb) return sa < sb;
  return a.perm < b.perm;
}

std::optional<ShiftChoice> evaluate(const Vector3& permuted, const Permutation& perm,
                                    const ShiftVector& n, const LambdaVector& source) {
  ShiftChoice cand;
  cand.perm = perm;
  cand.shift = n;
  cand.target = permuted + (kPi / 2) * n.cast<double>();
  try {
    cand.overhead = required_overhead(source, cand.target);
  } catch (const HluError& e) {
    if (e.is_infeasible()) return std::nullopt;
    throw;
  }
  if (!majorizes(cand.target, cand.overhead * source)) return std::nullopt;
  return cand;
}

std::optional<ShiftChoice> best_in_window(const CanonicalVector& lambda_prime,
                                          const LambdaVector& source, int window) {
  std::vector<std::future<std::optional<ShiftChoice>>> jobs;
  for (const auto& perm : Permutation::all()) {
    jobs.push_back(std::async(std::launch::async, [&, perm] {
      const Vector3 permuted = perm.apply(lambda_prime);
      std::optional<ShiftChoice> best;
      for (int a = -window; a <= window; ++a)
        for (int b = -window; b <= window; ++b)
          for (int c = -window; c <= window; ++c) {
            auto cand = evaluate(permuted, perm, ShiftVector(a, b, c), source);
            if (cand && (!best || better(*cand, *best))) best = cand;
          }
      return best;
    }));
  }
  std::optional<ShiftChoice> best;
  for (auto& j : jobs) {
    auto cand = j.get();
    if (cand && (!best || better(*cand, *best))) best = cand;
  }
  return best;
}

bool same_choice(const ShiftChoice& a, const ShiftChoice& b) {
  return !better(a, b) && !better(b, a);
}

bool is_isotropic(const LambdaVector& v) {
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  return v.maxCoeff() - v.minCoeff() <= 1e-10 * scale && v.cwiseAbs().maxCoeff() > 1e-12;
}

bool has_equal_locals(const PauliRep& p) {
  return (p.local_a - p.local_b).cwiseAbs().maxCoeff() <= 1e-10;
}

// Symmetric interaction available from the source, with the projection
// mixing needed to isolate it (empty when the source is already usable).
struct UsableSource {
  Matrix3 m_s;
  Mixing projection;
};

UsableSource usable_source(const PauliRep& h) {
  UsableSource s;
  const SymmetryClass cls = classify(h);
  if ((cls == SymmetryClass::kSymmetric || cls == SymmetryClass::kZero) && has_equal_locals(h)) {
    s.m_s = split_sym_antisym(h).symmetric;
    return s;
  }
  ProjectionResult proj = symmetric_projection_mixing(h);
  s.m_s = proj.projected.m;
  s.projection = std::move(proj.mixing);
  return s;
}

}  // namespace

ShiftChoice shift_search(const CanonicalVector& lambda_prime, const LambdaVector& lambda_source,
                         int window) {
  if (window < 1) throw HluError(Reason::kSchema, "shift window must be >= 1");
  auto best = best_in_window(lambda_prime, lambda_source, window);
  if (!best) {
    if (is_isotropic(lambda_source))
      throw HluError(Reason::kIsotropicFixedPoint,
                     "isotropic source: no integer shift makes the canonical vector "
                     "proportional to (1,1,1)");
    if (std::abs(lambda_source.sum()) <= 1e-12 * std::max(1.0, lambda_source.cwiseAbs().maxCoeff()))
      throw HluError(Reason::kTracelessObstruction,
                     "traceless source: no integer shift in the window makes the target "
                     "traceless and majorized");
    throw HluError(Reason::kWindowExhausted,
                   "no feasible shift within window " + std::to_string(window));
  }
  // Guard against optima sitting on the window boundary.
  for (int w = window + 1; w <= 64; ++w) {
    auto wider = best_in_window(lambda_prime, lambda_source, w);
    if (same_choice(*wider, *best)) return *best;
    best = wider;
  }
  throw HluError(Reason::kWindowExhausted, "shift optimum did not stabilise");
}

int SynthesisPlan::inhomogeneous_layers() const {
  int n = 0;
  for (const auto* layer : {&pre_local, &interleave, &post_local})
    if (*layer && !(*layer)->is_homogeneous()) ++n;
  return n;
}

TwoQubitOperator SynthesisPlan::ideal() const {
  // Each run simulates the target canonical gate exactly.
  const TwoQubitOperator run = canonical_gate(simulated);
  TwoQubitOperator total = run;
  for (int r = 1; r < repetitions; ++r)
    total = run * (interleave ? interleave->matrix() : Matrix4c::Identity()) * total;
  if (pre_local) total = total * pre_local->matrix();
  if (post_local) total = post_local->matrix() * total;
  return total;
}

TwoQubitOperator execute_plan(const SynthesisPlan& plan, const PauliRep& h_source, long n_slices) {
  const TwoQubitOperator run = execute(plan.protocol, h_source, 1.0, n_slices);
  TwoQubitOperator total = run;
  for (int r = 1; r < plan.repetitions; ++r)
    total = run * (plan.interleave ? plan.interleave->matrix() : Matrix4c::Identity()) * total;
  if (plan.pre_local) total = total * plan.pre_local->matrix();
  if (plan.post_local) total = plan.post_local->matrix() * total;
  return total;
}

VerificationReport verify_plan(const SynthesisPlan& plan, const PauliRep& h_source, long n_slices) {
  const TwoQubitOperator v = execute_plan(plan, h_source, n_slices);
  VerificationReport r;
  r.n_slices = n_slices;
  r.epsilon = plan.protocol.overhead / static_cast<double>(n_slices);
  r.distance = phase_invariant_distance(plan.target, v);
  r.fidelity = gate_fidelity(plan.target, v);
  return r;
}

SynthesisPlan synthesize_gate(const TwoQubitOperator& u, const PauliRep& h_source, int window) {
  if (!u.allFinite() || !is_unitary(u, 1e-10))
    throw HluError(Reason::kNotUnitary, "gate is not unitary");
  if (!is_swap_symmetric(u))
    throw HluError(Reason::kAsymmetricGate,
                   "homogeneous control only reaches swap-symmetric gates; use the hybrid plan");

  const UsableSource src = usable_source(h_source);
  const Eigensystem es = symm_eigenvalues(src.m_s);
  const GateDecomposition kak = kak_decompose(u);
  const ShiftChoice choice = shift_search(kak.canonical, es.values, window);

  SynthesisPlan plan;
  plan.shift = choice.shift;
  plan.perm = choice.perm;
  plan.canonical = kak.canonical;
  plan.simulated = choice.target;
  plan.overhead = choice.overhead;
  plan.target = u;

  if (choice.overhead > 0.0) {
    const PermutationMixing pm = construct_mixing(es.values, choice.target, choice.overhead);
    Mixing mix;
    for (const auto& term : pm.terms) {
      const SU2Element w = so3_to_su2(permutation_to_rotation(term.perm) * es.frame);
      if (src.projection.empty()) {
        mix.push_back({term.weight, w});
      } else {
        for (const auto& q : src.projection) mix.push_back({term.weight * q.weight, w * q.u});
      }
    }
    plan.protocol = mixing_to_protocol(mix, choice.overhead);
  }
  const PauliRep eff = effective_hamiltonian(plan.protocol, h_source);
  if ((eff.local_a - eff.local_b).cwiseAbs().maxCoeff() > 1e-9)
    throw HluError(Reason::kUnequalLocalTerms, "source local terms cannot be cancelled");
  plan.protocol.local_field = -eff.local_a;
  if (plan.protocol.local_field.cwiseAbs().maxCoeff() <= 1e-14) plan.protocol.local_field.setZero();

  // u = e^{i phi} (x (x) x) U_l' (y (x) y); the permuted, shifted canonical
  // gate differs from U_l' by the homogeneous conjugation w_p and the local
  // U_{-pi/2 n} = phase * (g (x) g), g = prod_k (-i s_k)^{|n_k|}.
  const SU2Element wp = so3_to_su2(permutation_to_rotation(choice.perm));
  SU2Element g;
  for (int k = 0; k < 3; ++k)
    for (int r = 0; r < std::abs(choice.shift(k)); ++r) g = g * SU2Element::pauli_rotation(k + 1);
  plan.post_local = LocalLayer::homogeneous(kak.u_a * wp.adjoint());
  plan.pre_local = LocalLayer::homogeneous(g * wp * kak.v_a);

  if (phase_invariant_distance(u, plan.ideal()) > 1e-8)
    throw std::logic_error("synthesis plan does not reassemble the gate");
  return plan;
}

SynthesisPlan hybrid_plan(const TwoQubitOperator& u, const PauliRep& h_source, int window) {
  if (!u.allFinite() || !is_unitary(u, 1e-10))
    throw HluError(Reason::kNotUnitary, "gate is not unitary");
  const GateDecomposition kak = kak_decompose(u);
  const UsableSource src = usable_source(h_source);
  const Eigensystem es = symm_eigenvalues(src.m_s);
  const Vector3& l = kak.canonical;

  SynthesisPlan core;
  bool composed = false;
  if (is_isotropic(es.values) && !is_isotropic(l) && l.cwiseAbs().maxCoeff() > 1e-12) {
    const Vector3 cnot_class(kPi / 4, 0.0, 0.0);
    if ((l - cnot_class).cwiseAbs().maxCoeff() > 1e-9)
      throw HluError(Reason::kIsotropicFixedPoint,
                     "an isotropic source reaches only (1,1,1)-proportional and CNOT-class "
                     "non-local parts");
    // U_(pi/4,0,0) = U_a X U_a X with U_a = U_(pi/8)(1,1,1), X = I (x) s_x:
    // conjugating by X negates the yy and zz coefficients.
    core = synthesize_gate(canonical_gate(Vector3::Constant(kPi / 8)), h_source, window);
    composed = true;
  } else {
    core = synthesize_gate(canonical_gate(l), h_source, window);
  }

  SynthesisPlan plan = core;
  plan.target = u;
  plan.canonical = l;
  const SU2Element x = SU2Element::pauli_rotation(1);
  LocalLayer pre = *core.pre_local;
  LocalLayer post = *core.post_local;
  if (composed) {
    plan.repetitions = 2;
    plan.overhead = 2 * core.overhead;
    plan.interleave = LocalLayer{pre.a * post.a, pre.b * x * post.b};
    pre = LocalLayer{pre.a, pre.b * x};
  }
  plan.pre_local = LocalLayer{pre.a * kak.v_a, pre.b * kak.v_b};
  plan.post_local = LocalLayer{kak.u_a * post.a, kak.u_b * post.b};

  if (phase_invariant_distance(u, plan.ideal()) > 1e-8)
    throw std::logic_error("hybrid plan does not reassemble the gate");
  return plan;
}

}  // namespace hlu
