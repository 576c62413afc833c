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

/**
 * The four conjugations {I, s_x, s_y, s_z} with weight 1/4 each (as SU(2)
 * elements -i s_k). Their average keeps alpha and the diagonal of m and
 * removes everything else.
 */
Mixing diagonal_projection_mixing();

struct ProjectionResult {
  Mixing mixing;
  PauliRep projected;
};

/**
 * Four-term mixing {(1/4, u^dag s_k u)} with u the SU(2) lift of the frame
 * diagonalising the symmetric part. It maps any interaction onto its
 * symmetric part with no local terms at overhead 1.
 */
ProjectionResult symmetric_projection_mixing(const PauliRep& p);

/// Weighted conjugation sum evaluated on the full 4x4 operator.
PauliRep apply_mixing(const PauliRep& p, const Mixing& mixing);

}  // namespace hlu
