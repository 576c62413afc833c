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
#include "hlu/spectral.hpp"

namespace hlu {

/// Non-local coordinates of exp(-i sum_k lambda_k s_k (x) s_k), in radians.
using CanonicalVector = LambdaVector;

/**
 * u = e^{i phase} (u_a (x) u_b) canonical_gate(canonical) (v_a (x) v_b).
 *
 * For swap-symmetric gates the decomposition is homogeneous (u_a = u_b,
 * v_a = v_b) and pi/4 >= |l1| >= |l2| >= |l3|. Otherwise
 * pi/4 >= l1 >= l2 >= |l3|, with l3 >= 0 when l1 = pi/4.
 */
struct GateDecomposition {
  SU2Element u_a, u_b, v_a, v_b;
  CanonicalVector canonical = CanonicalVector::Zero();
  double global_phase = 0.0;
  bool homogeneous = false;

  TwoQubitOperator reassemble() const;
};

/// Bell-type basis in which local gates are real orthogonal matrices.
const Matrix4c& magic_basis();

/// S u S^dag = u within tol (max entry).
bool is_swap_symmetric(const TwoQubitOperator& u, double tol = 1e-9);

/// Throws Reason::kNotUnitary for non-unitary input.
GateDecomposition kak_decompose(const TwoQubitOperator& u);

/// Closed form; the three generators commute.
TwoQubitOperator canonical_gate(const CanonicalVector& lambda);

}  // namespace hlu
