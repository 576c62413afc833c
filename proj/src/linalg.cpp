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

#include "hlu/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace hlu {

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t) {
  const Eigen::MatrixXcd sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  const Eigen::VectorXd& e = es.eigenvalues();
  Eigen::VectorXcd phases(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i)
    phases(i) = std::polar(1.0, -e(i) * t);
  const Eigen::MatrixXcd& v = es.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, long n) {
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  Eigen::MatrixXcd base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

double phase_invariant_distance(const Eigen::MatrixXcd& u,
                                const Eigen::MatrixXcd& v) {
  // Evaluated directly rather than from the overlap formula, which cancels
  // catastrophically for nearly equal operators.
  const std::complex<double> overlap = (u.adjoint() * v).trace();
  const std::complex<double> phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
  return (v - phase * u).norm();
}

double gate_fidelity(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

}  // namespace hlu
