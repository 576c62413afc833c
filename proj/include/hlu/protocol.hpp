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
#include <vector>

#include "hlu/pauli.hpp"

namespace hlu {

/// One term p_k (v_k (x) v_k) H (v_k (x) v_k)^dag of a homogeneous mixing.
struct WeightedConjugation {
  double weight = 0.0;
  SU2Element u;
};

using Mixing = std::vector<WeightedConjugation>;

/// Throws Reason::kSchema unless weights are non-negative and sum to 1.
void check_distribution(const Mixing& mix, double tol = 1e-12);

struct ProtocolStep {
  SU2Element conjugation;
  double fraction = 0.0;
};

/// One-qubit unitaries applied once, a on qubit A and b on qubit B.
struct LocalLayer {
  SU2Element a;
  SU2Element b;

  static LocalLayer homogeneous(const SU2Element& u) { return {u, u}; }
  bool is_homogeneous(double tol = 1e-10) const;
  Matrix4c matrix() const { return local_pair(a, b); }
};

/**
 * Executable homogeneous control schedule. The natural Hamiltonian runs for
 * a total time overhead * t' split into equal slices; inside a slice step k
 * runs for its fraction of the slice while conjugated by v_k (x) v_k, in the
 * listed order. `local_field` is a homogeneous one-qubit Hamiltonian added
 * to every slice (in simulated-time units) to cancel source local terms and
 * supply target ones. `local_pre` / `local_post` are applied once before and
 * after the whole run.
 *
 * A protocol with no steps has zero overhead and runs only its local layers.
 */
struct HluProtocol {
  std::vector<ProtocolStep> steps;
  double overhead = 0.0;
  Vector3 local_field = Vector3::Zero();
  std::optional<LocalLayer> local_pre;
  std::optional<LocalLayer> local_post;

  /// Throws Reason::kSchema on a malformed schedule.
  void validate() const;

  /**
   * The fast pulses W_1 ... W_n, W_close of one slice: W_1 = v_1^dag,
   * W_{k+1} = v_{k+1}^dag v_k and a closing v_n, so that the frame returns
   * to the identity at the end of each slice.
   */
  std::vector<SU2Element> pulses() const;

  Mixing mixing() const;
};

}  // namespace hlu
