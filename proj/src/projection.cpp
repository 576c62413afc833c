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

#include "hlu/projection.hpp"

#include "hlu/spectral.hpp"

namespace hlu {

Mixing diagonal_projection_mixing() {
  Mixing mix;
  mix.push_back({0.25, SU2Element::identity()});
  for (int k = 1; k <= 3; ++k) mix.push_back({0.25, SU2Element::pauli_rotation(k)});
  return mix;
}

ProjectionResult symmetric_projection_mixing(const PauliRep& p) {
  const auto parts = split_sym_antisym(p);
  const SU2Element u = so3_to_su2(symm_eigenvalues(parts.symmetric).frame);
  ProjectionResult out;
  for (const auto& term : diagonal_projection_mixing())
    out.mixing.push_back({term.weight, u.adjoint() * term.u * u});
  out.projected.alpha = p.alpha;
  out.projected.m = parts.symmetric;
  return out;
}

PauliRep apply_mixing(const PauliRep& p, const Mixing& mixing) {
  check_distribution(mixing);
  const Matrix4c h = from_pauli(p);
  Matrix4c acc = Matrix4c::Zero();
  for (const auto& t : mixing) {
    const Matrix4c w = homogeneous(t.u);
    acc += t.weight * w * h * w.adjoint();
  }
  return to_pauli(Matrix4c((acc + acc.adjoint()) / 2.0));
}

}  // namespace hlu
