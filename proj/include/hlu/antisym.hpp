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

#include <vector>

#include "hlu/pauli.hpp"

namespace hlu {

/// Pseudo-vector v_i = eps_ijk M_jk of an antisymmetric interaction matrix.
using AxialVector = Vector3;

struct RotationTerm {
  double weight = 0.0;
  SO3Rotation rotation;
};

/// Throws Reason::kShape unless m_a is antisymmetric to 1e-10.
AxialVector pauli_vector(const Matrix3& m_a);

/// Inverse of pauli_vector.
Matrix3 antisymmetric_from_vector(const AxialVector& v);

/// Minimal overhead |v_tgt| / |v_src|; zero when the target vanishes.
double antisym_overhead(const AxialVector& v_src, const AxialVector& v_tgt);

/**
 * Two-term rotation mixing with c sum_k p_k R_k v_src = v_tgt. R+ turns
 * v_src onto the target direction and R- onto its opposite; the weights
 * interpolate between them. Collapses to one term when p = 1.
 */
std::vector<RotationTerm> construct_rotation_mixing(const AxialVector& v_src,
                                                    const AxialVector& v_tgt,
                                                    double c);

/// Rotation taking unit vector `from` to unit vector `to`.
SO3Rotation align(const Vector3& from, const Vector3& to);

}  // namespace hlu
