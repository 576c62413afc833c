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

#include "hlu/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "hlu/antisym.hpp"
#include "hlu/error.hpp"
#include "hlu/linalg.hpp"
#include "hlu/projection.hpp"
#include "hlu/spectral.hpp"

namespace hlu {

namespace {

double scale_of(const PauliRep& p) {
  return std::max({1.0, p.m.cwiseAbs().maxCoeff(), p.local_a.cwiseAbs().maxCoeff(),
                   p.local_b.cwiseAbs().maxCoeff()});
}

Matrix2c field_matrix(const Vector3& f) {
  return f(0) * pauli(1) + f(1) * pauli(2) + f(2) * pauli(3);
}

struct Route {
  Mixing mixing;
  double c = 0.0;
};

bool is_isotropic(const LambdaVector& v) {
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  return v.maxCoeff() - v.minCoeff() <= 1e-10 * scale && v.cwiseAbs().maxCoeff() > 0;
}

// Homogeneous mixing with c sum_k p_k R_k m_src R_k^T = m_tgt, both symmetric.
Route symmetric_route(const Matrix3& m_src, const Matrix3& m_tgt) {
  const Eigensystem es = symm_eigenvalues(m_src);
  const Eigensystem et = symm_eigenvalues(m_tgt);
  const double c = required_overhead(es.values, et.values);
  if (!majorizes(et.values, c * es.values)) {
    if (is_isotropic(es.values))
      throw HluError(Reason::kIsotropicFixedPoint,
                     "an isotropic interaction only simulates multiples of itself");
    throw HluError(Reason::kMajorizationViolated,
                   "target spectrum is not majorized by c times the source spectrum");
  }
  Route route;
  route.c = c;
  const PermutationMixing pm = construct_mixing(es.values, et.values, c);
  for (const auto& term : pm.terms) {
    const SO3Rotation r =
        et.frame.transpose() * permutation_to_rotation(term.perm) * es.frame;
    route.mixing.push_back({term.weight, so3_to_su2(r)});
  }
  return route;
}

Route antisymmetric_route(const Matrix3& m_src, const Matrix3& m_tgt) {
  const AxialVector vs = pauli_vector(m_src);
  const AxialVector vt = pauli_vector(m_tgt);
  Route route;
  route.c = antisym_overhead(vs, vt);
  for (const auto& term : construct_rotation_mixing(vs, vt, route.c))
    route.mixing.push_back({term.weight, so3_to_su2(term.rotation)});
  return route;
}

// Route through the four-term symmetric projection: every step of the
// symmetric-case mixing is split into four equal sub-steps.
Route projected_route(const PauliRep& src, const Matrix3& m_tgt) {
  const ProjectionResult proj = symmetric_projection_mixing(src);
  const Route inner = symmetric_route(proj.projected.m, m_tgt);
  Route route;
  route.c = inner.c;
  for (const auto& outer : inner.mixing)
    for (const auto& q : proj.mixing)
      route.mixing.push_back({outer.weight * q.weight, outer.u * q.u});
  return route;
}

}  // namespace

SymmetryClass classify(const PauliRep& p, double tol) {
  const auto parts = split_sym_antisym(p);
  const double scale = std::max(1.0, p.m.cwiseAbs().maxCoeff());
  const bool sym = parts.antisymmetric.cwiseAbs().maxCoeff() <= tol * scale;
  const bool anti = parts.symmetric.cwiseAbs().maxCoeff() <= tol * scale;
  if (sym && anti) return SymmetryClass::kZero;
  if (sym) return SymmetryClass::kSymmetric;
  if (anti) return SymmetryClass::kAntisymmetric;
  return SymmetryClass::kMixed;
}

HluProtocol mixing_to_protocol(const Mixing& mixing, double c) {
  check_distribution(mixing);
  if (!std::isfinite(c) || c < 0)
    throw HluError(Reason::kSchema, "overhead must be finite and non-negative");
  HluProtocol p;
  p.overhead = c;
  for (const auto& term : mixing) {
    if (term.weight <= 0.0) continue;
    if (!p.steps.empty() && p.steps.back().conjugation.same_conjugation(term.u))
      p.steps.back().fraction += term.weight;
    else
      p.steps.push_back({term.u, term.weight});
  }
  return p;
}

PauliRep effective_hamiltonian(const HluProtocol& p, const PauliRep& h) {
  PauliRep eff;
  for (const auto& s : p.steps) eff = eff + conjugate(h, s.conjugation) * (p.overhead * s.fraction);
  eff.local_a += p.local_field;
  eff.local_b += p.local_field;
  return eff;
}

TwoQubitOperator execute(const HluProtocol& p, const PauliRep& h, double t_prime,
                         long n_slices) {
  if (n_slices < 1) throw HluError(Reason::kSchema, "n_slices must be >= 1");
  p.validate();
  const Matrix4c hm = from_pauli(h);
  const double total = p.overhead * t_prime;
  const double eps = total / static_cast<double>(n_slices);
  const bool has_field = p.local_field.norm() > 0.0;

  Matrix4c run;
  if (p.steps.size() == 1 && !has_field) {
    // A single step commutes with itself: one exponential, no slicing.
    const Matrix4c w = homogeneous(p.steps.front().conjugation);
    run = w * expm_hermitian(hm, total) * w.adjoint();
  } else {
    Matrix4c slice = Matrix4c::Identity();
    for (const auto& s : p.steps) {
      const Matrix4c w = homogeneous(s.conjugation);
      slice = Matrix4c(w * expm_hermitian(hm, eps * s.fraction) * w.adjoint()) * slice;
    }
    if (has_field) {
      const Eigen::MatrixXcd f = expm_hermitian(field_matrix(p.local_field),
                                                t_prime / static_cast<double>(n_slices));
      slice = kron(f, f) * slice;
    }
    run = matrix_power(slice, n_slices);
  }
  if (p.local_pre) run = run * p.local_pre->matrix();
  if (p.local_post) run = p.local_post->matrix() * run;
  return run;
}

VerificationReport verify(const HluProtocol& p, const PauliRep& h,
                          const TwoQubitOperator& target, double t_prime, long n_slices) {
  const Matrix4c v = execute(p, h, t_prime, n_slices);
  VerificationReport r;
  r.n_slices = n_slices;
  r.epsilon = p.overhead * t_prime / static_cast<double>(n_slices);
  r.distance = phase_invariant_distance(target, v);
  r.fidelity = gate_fidelity(target, v);
  return r;
}

HluProtocol compile_simulation(const PauliRep& h_source, const PauliRep& h_target) {
  const double tol = 1e-10;
  if ((h_target.local_a - h_target.local_b).cwiseAbs().maxCoeff() > tol * scale_of(h_target))
    throw HluError(Reason::kUnequalLocalTerms,
                   "homogeneous control cannot produce unequal target local terms");

  const SymmetryClass src = classify(h_source);
  const SymmetryClass tgt = classify(h_target);
  const bool src_equal_locals =
      (h_source.local_a - h_source.local_b).cwiseAbs().maxCoeff() <= tol * scale_of(h_source);

  Route route;
  if (tgt == SymmetryClass::kZero) {
    route.c = 0.0;
  } else if (src == SymmetryClass::kZero) {
    throw HluError(Reason::kInfeasible, "source has no interaction part");
  } else if (tgt == SymmetryClass::kSymmetric) {
    if (src == SymmetryClass::kSymmetric && src_equal_locals)
      route = symmetric_route(h_source.m, h_target.m);
    else if (src == SymmetryClass::kAntisymmetric)
      throw HluError(Reason::kSymmetryClass,
                     "an antisymmetric interaction only simulates antisymmetric ones");
    else
      route = projected_route(h_source, h_target.m);
  } else if (tgt == SymmetryClass::kAntisymmetric) {
    if (src != SymmetryClass::kAntisymmetric)
      throw HluError(Reason::kSymmetryClass,
                     "an antisymmetric target needs an antisymmetric source");
    route = antisymmetric_route(h_source.m, h_target.m);
  } else {
    throw HluError(Reason::kSymmetryClass,
                   "targets with both symmetric and antisymmetric parts are not supported");
  }

  HluProtocol protocol;
  if (route.c > 0.0) protocol = mixing_to_protocol(route.mixing, route.c);

  // Local terms the schedule leaves behind must be equal on both qubits so
  // that one homogeneous field can replace them with the target's.
  const PauliRep eff = effective_hamiltonian(protocol, h_source);
  if ((eff.local_a - eff.local_b).cwiseAbs().maxCoeff() > 1e-9 * scale_of(h_source))
    throw HluError(Reason::kUnequalLocalTerms,
                   "source local terms survive the mixing unequally and cannot be cancelled");
  protocol.local_field = h_target.local_a - eff.local_a;
  if (protocol.local_field.cwiseAbs().maxCoeff() <= 1e-14) protocol.local_field.setZero();
  return protocol;
}

}  // namespace hlu
