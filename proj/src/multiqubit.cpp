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

#include "hlu/multiqubit.hpp"

#include <algorithm>
#include <set>

#include "hlu/error.hpp"
#include "hlu/linalg.hpp"
#include "hlu/simulation.hpp"

namespace hlu {

namespace {

// a (x) b with a as the more significant factor.
Eigen::MatrixXcd kron_dyn(const Eigen::MatrixXcd& a, const Matrix2c& b) {
  Eigen::MatrixXcd out(a.rows() * 2, a.cols() * 2);
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

Eigen::MatrixXcd tensor_power(const Matrix2c& u, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 0; q < n; ++q) out = kron_dyn(out, u);
  return out;
}

Eigen::MatrixXcd field_on_all(int n, const Vector3& f) {
  const Matrix2c fm = f(0) * pauli(1) + f(1) * pauli(2) + f(2) * pauli(3);
  const long dim = 1L << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int q = 0; q < n; ++q) out += embed_one(n, q, fm);
  return out;
}

}  // namespace

CouplingGraph CouplingGraph::uniform(int n_qubits, std::vector<std::pair<int, int>> edges,
                                     const PauliRep& h) {
  CouplingGraph g;
  g.n_qubits = n_qubits;
  g.interactions.assign(edges.size(), h);
  g.edges = std::move(edges);
  return g;
}

CouplingGraph CouplingGraph::open_chain(int n_qubits, const PauliRep& h) {
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q + 1 < n_qubits; ++q) edges.emplace_back(q, q + 1);
  return uniform(n_qubits, std::move(edges), h);
}

void CouplingGraph::validate() const {
  if (n_qubits < 2 || n_qubits > 10)
    throw HluError(Reason::kShape, "coupling graph needs 2 to 10 qubits");
  if (interactions.size() != edges.size())
    throw HluError(Reason::kShape, "one interaction per edge is required");
  std::set<std::pair<int, int>> seen;
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n_qubits || j >= n_qubits || i == j)
      throw HluError(Reason::kShape, "edge endpoints out of range or self-loop");
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
      throw HluError(Reason::kShape, "duplicate edge");
  }
  for (const auto& h : interactions)
    if (max_abs_diff(h, interactions.front()) > 1e-12)
      throw HluError(Reason::kUnsupported,
                     "edges with different interactions are not supported");
}

Eigen::MatrixXcd embed_one(int n, int q, const Matrix2c& op) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = 0; k < n; ++k) out = kron_dyn(out, k == q ? op : pauli(0));
  return out;
}

Eigen::MatrixXcd embed_two_body(int n, int i, int j, const PauliRep& p) {
  const long dim = 1L << n;
  Eigen::MatrixXcd h = p.alpha * Eigen::MatrixXcd::Identity(dim, dim);
  for (int a = 1; a <= 3; ++a) {
    const Eigen::MatrixXcd sa = embed_one(n, i, pauli(a));
    h += p.local_a(a - 1) * sa;
    h += p.local_b(a - 1) * embed_one(n, j, pauli(a));
    for (int b = 1; b <= 3; ++b) h += p.m(a - 1, b - 1) * (sa * embed_one(n, j, pauli(b)));
  }
  return h;
}

Eigen::MatrixXcd graph_hamiltonian(const CouplingGraph& g) {
  g.validate();
  const long dim = 1L << g.n_qubits;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    h += embed_two_body(g.n_qubits, g.edges[e].first, g.edges[e].second, g.interactions[e]);
  return h;
}

Matrix3 pair_coupling(const Eigen::MatrixXcd& h, int n, int i, int j) {
  Matrix3 m;
  const double norm = static_cast<double>(1L << n);
  for (int a = 1; a <= 3; ++a) {
    const Eigen::MatrixXcd sa = embed_one(n, i, pauli(a));
    for (int b = 1; b <= 3; ++b)
      m(a - 1, b - 1) = (h * sa * embed_one(n, j, pauli(b))).trace().real() / norm;
  }
  return m;
}

LiftedSystem multiqubit_lift(const CouplingGraph& g, const HluProtocol& protocol) {
  g.validate();
  protocol.validate();
  if ((protocol.local_pre && !protocol.local_pre->is_homogeneous()) ||
      (protocol.local_post && !protocol.local_post->is_homogeneous()))
    throw HluError(Reason::kUnsupported, "multi-qubit lift needs homogeneous local layers");

  LiftedSystem sys;
  sys.n_qubits = g.n_qubits;
  sys.protocol = protocol;
  sys.hamiltonian = graph_hamiltonian(g);
  const long dim = 1L << g.n_qubits;

  sys.effective = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& s : protocol.steps) {
    const Eigen::MatrixXcd w = tensor_power(s.conjugation.matrix(), g.n_qubits);
    sys.effective += (protocol.overhead * s.fraction) * (w * sys.hamiltonian * w.adjoint());
  }
  const Eigen::MatrixXcd field = field_on_all(g.n_qubits, protocol.local_field);
  sys.effective += field;

  HluProtocol no_field = protocol;
  no_field.local_field.setZero();
  sys.expected = field;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    sys.expected += embed_two_body(g.n_qubits, g.edges[e].first, g.edges[e].second,
                                   effective_hamiltonian(no_field, g.interactions[e]));
  sys.edge_mismatch = (sys.effective - sys.expected).cwiseAbs().maxCoeff();
  return sys;
}

Eigen::MatrixXcd LiftedSystem::execute(double t_prime, long n_slices) const {
  if (n_slices < 1) throw HluError(Reason::kSchema, "n_slices must be >= 1");
  const long dim = 1L << n_qubits;
  const double eps = protocol.overhead * t_prime / static_cast<double>(n_slices);
  Eigen::MatrixXcd slice = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& s : protocol.steps) {
    const Eigen::MatrixXcd w = tensor_power(s.conjugation.matrix(), n_qubits);
    slice = (w * expm_hermitian(hamiltonian, eps * s.fraction) * w.adjoint()) * slice;
  }
  if (protocol.local_field.norm() > 0.0)
    slice = expm_hermitian(field_on_all(n_qubits, protocol.local_field),
                           t_prime / static_cast<double>(n_slices)) *
            slice;
  Eigen::MatrixXcd run = matrix_power(slice, n_slices);
  if (protocol.local_pre) run = run * tensor_power(protocol.local_pre->a.matrix(), n_qubits);
  if (protocol.local_post) run = tensor_power(protocol.local_post->a.matrix(), n_qubits) * run;
  return run;
}

Eigen::MatrixXcd LiftedSystem::ideal(double t_prime) const {
  Eigen::MatrixXcd run = expm_hermitian(effective, t_prime);
  if (protocol.local_pre) run = run * tensor_power(protocol.local_pre->a.matrix(), n_qubits);
  if (protocol.local_post) run = tensor_power(protocol.local_post->a.matrix(), n_qubits) * run;
  return run;
}

}  // namespace hlu
