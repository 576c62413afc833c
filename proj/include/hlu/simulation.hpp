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

#pragma once

#include "hlu/pauli.hpp"
#include "hlu/protocol.hpp"

namespace hlu {

struct VerificationReport {
  double epsilon = 0.0;  // physical slice length overhead * t' / n_slices
  long n_slices = 0;
  double distance = 0.0;  // phase-invariant Frobenius distance
  double fidelity = 0.0;  // |tr(U^dag V)| / dim
};

enum class SymmetryClass { kZero, kSymmetric, kAntisymmetric, kMixed };

/// Class of the interaction matrix alone (local terms are not inspected).
SymmetryClass classify(const PauliRep& p, double tol = 1e-10);

/// Steps in mixing order; consecutive equal conjugations are merged.
HluProtocol mixing_to_protocol(const Mixing& mixing, double c);

/**
 * Ideal Hamiltonian of the schedule, c sum_k p_k conj_k(h) plus the
 * homogeneous local field. No Trotter error.
 */
PauliRep effective_hamiltonian(const HluProtocol& p, const PauliRep& h);

/**
 * Product-formula evolution: n_slices equal slices of physical length
 * overhead * t' / n_slices, each running the steps in order and then the
 * local field, wrapped in the optional pre/post layers.
 */
TwoQubitOperator execute(const HluProtocol& p, const PauliRep& h,
                         double t_prime, long n_slices);

VerificationReport verify(const HluProtocol& p, const PauliRep& h,
                          const TwoQubitOperator& target, double t_prime,
                          long n_slices);

/**
 * Compile a homogeneous control schedule that makes h_source act as
 * h_target. Symmetric pairs use the majorization construction,
 * antisymmetric pairs the axial-vector construction, and a source with an
 * antisymmetric part or unequal local terms is first projected onto its
 * symmetric part. Equal local terms are cancelled and supplied through the
 * protocol's local field.
 */
HluProtocol compile_simulation(const PauliRep& h_source, const PauliRep& h_target);

}  // namespace hlu
