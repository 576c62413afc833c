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

#include "hlu/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hlu/error.hpp"
#include "hlu/linalg.hpp"

namespace hlu {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);
constexpr double kBranchTol = 1e-10;

// Real orthogonal p with p^T m p diagonal, for complex symmetric unitary m.
// Its real and imaginary parts commute, so a generic real combination of the
// two has a common eigenbasis; retry with fresh coefficients when an
// accidental degeneracy leaves the product non-diagonal.
Eigen::MatrixXd real_diagonalizer(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXd re = m.real();
  const Eigen::MatrixXd im = m.imag();
  std::mt19937_64 rng(0x5eedu);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  double a = 1.0, b = 0.5;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a * re + b * im);
    const Eigen::MatrixXd& p = es.eigenvectors();
    Eigen::MatrixXcd d = p.transpose() * m * p;
    d.diagonal().setZero();
    if (d.cwiseAbs().maxCoeff() <= kBranchTol) return p;
    a = coef(rng);
    b = coef(rng);
  }
  throw std::logic_error("magic-basis diagonalisation did not converge");
}

struct OrthogonalFactors {
  Eigen::MatrixXd o1;
  Eigen::VectorXcd d;
  Eigen::MatrixXd o2;
};

// ub = o1 diag(d) o2 with o1, o2 in SO(n).
OrthogonalFactors factor_unitary(const Eigen::MatrixXcd& ub) {
  Eigen::MatrixXcd m = ub.transpose() * ub;
  m = (m + m.transpose()) / 2.0;
  Eigen::MatrixXd p = real_diagonalizer(m);
  if (p.determinant() < 0) p.col(0) *= -1.0;
  OrthogonalFactors f;
  f.o2 = p.transpose();
  const Eigen::VectorXcd d2 = (p.transpose() * m * p).diagonal();
  f.d.resize(d2.size());
  for (Eigen::Index j = 0; j < d2.size(); ++j) {
    const cplx r = std::sqrt(d2(j));
    f.d(j) = r / std::abs(r);
  }
  const Eigen::MatrixXcd o1 = ub * f.o2.transpose() * f.d.cwiseInverse().asDiagonal();
  f.o1 = o1.real();
  if (f.o1.determinant() < 0) {
    f.o1.col(0) *= -1.0;
    f.d(0) *= -1.0;
  }
  return f;
}

// k = a (x) b for k in SU(2) (x) SU(2).
std::pair<SU2Element, SU2Element> split_local(const Matrix4c& k) {
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double n = k.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) {
        best = n;
        bi = i;
        bj = j;
      }
    }
  const Matrix2c blk = k.block<2, 2>(2 * bi, 2 * bj);
  const Matrix2c b = blk / std::sqrt(blk.determinant());
  Matrix2c a;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) a(r, c) = (b.adjoint() * k.block<2, 2>(2 * r, 2 * c)).trace() / 2.0;
  return {SU2Element(a), SU2Element(b)};
}

// Running form u = e^{i phase} (a1 (x) b1) U_lambda (a2 (x) b2) with the
// moves that preserve it.
struct Canonicaliser {
  double phase = 0.0;
  SU2Element a1, b1, a2, b2;
  Vector3 lambda;

  // lambda_k += s pi/2, absorbing -i s sigma_k (x) sigma_k on the right.
  void shift(int k, int s) {
    const SU2Element g = SU2Element::pauli_rotation(k + 1);
    lambda(k) += s * kPi / 2;
    phase -= s * kPi / 2;
    a2 = g * a2;
    b2 = g * b2;
  }

  // Homogeneous conjugation reordering lambda by p.
  void permute(const Permutation& p) {
    const SU2Element w = so3_to_su2(permutation_to_rotation(p));
    lambda = p.apply(lambda);
    a1 = a1 * w.adjoint();
    b1 = b1 * w.adjoint();
    a2 = w * a2;
    b2 = w * b2;
  }

  // Conjugation by sigma_k on qubit A only: negates the other two entries.
  void flip(int k) {
    const SU2Element g = SU2Element::pauli_rotation(k + 1);
    for (int j = 0; j < 3; ++j)
      if (j != k) lambda(j) = -lambda(j);
    phase += kPi;
    a1 = a1 * g;
    a2 = g * a2;
  }

  void fold() {
    for (int k = 0; k < 3; ++k) {
      while (lambda(k) > kPi / 4 + kBranchTol) shift(k, -1);
      while (lambda(k) <= -kPi / 4 + kBranchTol) shift(k, +1);
    }
  }

  void sort_by_magnitude() {
    std::array<int, 3> idx{0, 1, 2};
    const Vector3 l = lambda;
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
      if (std::abs(std::abs(l(x)) - std::abs(l(y))) > kBranchTol)
        return std::abs(l(x)) > std::abs(l(y));
      return l(x) > l(y) + kBranchTol;
    });
    Permutation p;
    for (int r = 0; r < 3; ++r) p.to[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r;
    if (p != Permutation::identity()) permute(p);
  }

  void fix_signs() {
    const bool neg0 = lambda(0) < -kBranchTol;
    const bool neg1 = lambda(1) < -kBranchTol;
    if (neg0 && neg1)
      flip(2);
    else if (neg0)
      flip(1);
    else if (neg1)
      flip(0);
    if (std::abs(lambda(0) - kPi / 4) <= kBranchTol && lambda(2) < -kBranchTol) {
      flip(1);
      shift(0, +1);
    }
  }
};

}  // namespace

const Matrix4c& magic_basis() {
  static const Matrix4c b = [] {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix4c m;
    m.col(0) << r, 0, 0, r;
    m.col(1) << kI * r, 0, 0, -kI * r;
    m.col(2) << 0, kI * r, kI * r, 0;
    m.col(3) << 0, r, -r, 0;
    return m;
  }();
  return b;
}

bool is_swap_symmetric(const TwoQubitOperator& u, double tol) {
  const Matrix4c& s = swap_operator();
  return (s * u * s - u).cwiseAbs().maxCoeff() <= tol;
}

TwoQubitOperator GateDecomposition::reassemble() const {
  return std::polar(1.0, global_phase) * local_pair(u_a, u_b) * canonical_gate(canonical) *
         local_pair(v_a, v_b);
}

TwoQubitOperator canonical_gate(const CanonicalVector& lambda) {
  Matrix4c u = Matrix4c::Identity();
  for (int k = 0; k < 3; ++k)
    u *= std::cos(lambda(k)) * Matrix4c::Identity() -
         kI * std::sin(lambda(k)) * kron(pauli(k + 1), pauli(k + 1));
  return u;
}

GateDecomposition kak_decompose(const TwoQubitOperator& u) {
  if (!u.allFinite() || !is_unitary(u, 1e-10))
    throw HluError(Reason::kNotUnitary, "gate is not unitary");
  const bool symmetric = is_swap_symmetric(u);
  const Matrix4c& mb = magic_basis();

  const double phase0 = std::arg(u.determinant()) / 4.0;
  const Matrix4c un = std::polar(1.0, -phase0) * u;
  const Matrix4c ub = mb.adjoint() * un * mb;

  Eigen::Matrix4d o1 = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d o2 = Eigen::Matrix4d::Identity();
  Eigen::Vector4cd d;
  if (symmetric) {
    // The swap is diag(1, 1, 1, -1) here: triplet block plus singlet.
    const OrthogonalFactors f = factor_unitary(ub.topLeftCorner<3, 3>());
    o1.topLeftCorner<3, 3>() = f.o1;
    o2.topLeftCorner<3, 3>() = f.o2;
    d << f.d(0), f.d(1), f.d(2), ub(3, 3) / std::abs(ub(3, 3));
  } else {
    const OrthogonalFactors f = factor_unitary(ub);
    o1 = f.o1;
    o2 = f.o2;
    d = f.d;
  }

  // exp(-i H) for H = sum l_k s_k s_k has magic-basis phases exp(-i E_j)
  // with E = (l1 - l2 + l3, -l1 + l2 + l3, l1 + l2 - l3, -l1 - l2 - l3).
  const Eigen::Vector4d theta(std::arg(d(0)), std::arg(d(1)), std::arg(d(2)), std::arg(d(3)));
  Canonicaliser cz;
  cz.phase = phase0;
  cz.lambda = Vector3(-(theta(0) + theta(2)) / 2, -(theta(1) + theta(2)) / 2,
                      -(theta(0) + theta(1)) / 2);
  const auto [a1, b1] = split_local(mb * o1.cast<cplx>() * mb.adjoint());
  const auto [a2, b2] = split_local(mb * o2.cast<cplx>() * mb.adjoint());
  cz.a1 = a1;
  cz.b1 = symmetric ? a1 : b1;
  cz.a2 = a2;
  cz.b2 = symmetric ? a2 : b2;

  cz.fold();
  cz.sort_by_magnitude();
  if (!symmetric) cz.fix_signs();

  GateDecomposition out;
  out.u_a = cz.a1;
  out.u_b = cz.b1;
  out.v_a = cz.a2;
  out.v_b = cz.b2;
  out.canonical = cz.lambda;
  out.global_phase = std::remainder(cz.phase, 2 * kPi);
  out.homogeneous = symmetric;
  if ((out.reassemble() - u).cwiseAbs().maxCoeff() > 1e-9)
    throw std::logic_error("two-qubit decomposition failed its reassembly check");
  return out;
}

}  // namespace hlu
