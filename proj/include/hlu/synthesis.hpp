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

#include <optional>

#include "hlu/gate.hpp"
#include "hlu/protocol.hpp"
#include "hlu/simulation.hpp"

namespace hlu {

using ShiftVector = Eigen::Vector3i;

/// Header of a synthesis plan: simulate sum_k target_k s_k s_k for t' = 1.
struct ShiftChoice {
  ShiftVector shift = ShiftVector::Zero();
  Permutation perm;
  double overhead = 0.0;
  LambdaVector target = LambdaVector::Zero();  // perm(lambda') + pi/2 shift
};

/**
 * Minimise the overhead over permutations of lambda_prime and integer
 * shifts n in [-window, window]^3 subject to
 * perm(lambda') + pi/2 n majorized by c * lambda_source, c fixed by
 * required_overhead. Ties go to smaller |n|_1, then lexicographic n, then
 * lexicographic permutation. The window grows while growing it by one still
 * changes the optimum. Grid points are evaluated concurrently.
 */
ShiftChoice shift_search(const CanonicalVector& lambda_prime, const LambdaVector& lambda_source,
                         int window = 3);

/**
 * Executable gate recipe: post_local . run . (interleave . run)^(reps-1) .
 * pre_local, where run executes `protocol` for t' = 1 and equals
 * the gate up to a global phase.
 */
struct SynthesisPlan {
  ShiftVector shift = ShiftVector::Zero();
  Permutation perm;
  CanonicalVector canonical = CanonicalVector::Zero();  // lambda' of the simulated gate
  LambdaVector simulated = LambdaVector::Zero();        // perm(lambda') + pi/2 shift
  double overhead = 0.0;  // total interaction time, summed over repetitions
  HluProtocol protocol;
  int repetitions = 1;
  std::optional<LocalLayer> interleave;
  std::optional<LocalLayer> pre_local;
  std::optional<LocalLayer> post_local;
  TwoQubitOperator target = TwoQubitOperator::Identity();

  /// Number of local layers that act differently on the two qubits.
  int inhomogeneous_layers() const;
  /// The plan with ideal (Trotter-free) protocol runs.
  TwoQubitOperator ideal() const;
};

/**
 * Time-optimal homogeneous synthesis of a swap-symmetric gate. A source
 * with antisymmetric or unequal local parts is projected onto its symmetric
 * part first.
 */
SynthesisPlan synthesize_gate(const TwoQubitOperator& u, const PauliRep& h_source, int window = 3);

/**
 * Any two-qubit gate: its non-local core is synthesised homogeneously and
 * wrapped in two inhomogeneous local layers. An isotropic source builds the
 * CNOT class from two (pi/8)(1,1,1) gates around a one-sided sigma_x.
 */
SynthesisPlan hybrid_plan(const TwoQubitOperator& u, const PauliRep& h_source, int window = 3);

TwoQubitOperator execute_plan(const SynthesisPlan& plan, const PauliRep& h_source, long n_slices);
VerificationReport verify_plan(const SynthesisPlan& plan, const PauliRep& h_source, long n_slices);

}  // namespace hlu
