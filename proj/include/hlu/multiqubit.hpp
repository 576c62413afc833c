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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hlu/pauli.hpp"
#include "hlu/protocol.hpp"

namespace hlu {

/**
 * Two-body coupling pattern on n qubits (qubit 0 is the leftmost tensor
 * factor). Edge (i, j) carries its interaction with qubit i in the role of
 * A. Dense simulation bounds n to [2, 10].
 */
struct CouplingGraph {
  int n_qubits = 2;
  std::vector<std::pair<int, int>> edges;
  std::vector<PauliRep> interactions;  // one per edge

  static CouplingGraph uniform(int n_qubits, std::vector<std::pair<int, int>> edges,
                               const PauliRep& h);
  static CouplingGraph open_chain(int n_qubits, const PauliRep& h);

  /// Throws Reason::kShape on bad indices and kUnsupported on mixed edges.
  void validate() const;
};

/// Operator acting as `op` on qubit q of n.
Eigen::MatrixXcd embed_one(int n, int q, const Matrix2c& op);
/// Interaction p placed on qubits (i, j) of n, including its local terms.
Eigen::MatrixXcd embed_two_body(int n, int i, int j, const PauliRep& p);
Eigen::MatrixXcd graph_hamiltonian(const CouplingGraph& g);

/// Pair coupling matrix m_ab = tr(H s_a^(i) s_b^(j)) / 2^n.
Matrix3 pair_coupling(const Eigen::MatrixXcd& h, int n, int i, int j);

struct LiftedSystem {
  int n_qubits = 0;
  HluProtocol protocol;
  Eigen::MatrixXcd hamiltonian;
  /// c sum_k p_k w_k^(x)n H (w_k^(x)n)^dag plus the field on every qubit.
  Eigen::MatrixXcd effective;
  /// The two-qubit effective interaction placed on every edge, plus field.
  Eigen::MatrixXcd expected;
  double edge_mismatch = 0.0;  // max |effective - expected|

  Eigen::MatrixXcd execute(double t_prime, long n_slices) const;
  Eigen::MatrixXcd ideal(double t_prime) const;
};

/**
 * Broadcast a two-qubit homogeneous protocol to every qubit of the graph
 * and evaluate it densely. Local layers must be homogeneous.
 */
LiftedSystem multiqubit_lift(const CouplingGraph& g, const HluProtocol& protocol);

}  // namespace hlu
