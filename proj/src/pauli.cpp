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

#include "hlu/pauli.hpp"

#include <algorithm>
#include <cmath>

#include "hlu/error.hpp"

namespace hlu {

namespace {

constexpr cplx kI(0.0, 1.0);

std::array<Matrix2c, 4> make_paulis() {
  std::array<Matrix2c, 4> s;
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -kI, kI, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

// Pauli component tr(h P)/4 of a 4x4 operator.
double component(const Matrix4c& h, const Matrix4c& basis) {
  return (h * basis).trace().real() / 4.0;
}

}  // namespace

const Matrix2c& pauli(int k) {
  static const std::array<Matrix2c, 4> s = make_paulis();
  return s.at(static_cast<std::size_t>(k));
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

const Matrix4c& swap_operator() {
  static const Matrix4c s = [] {
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
    return m;
  }();
  return s;
}

bool is_hermitian(const Eigen::MatrixXcd& h, double tol) {
  if (h.rows() != h.cols()) return false;
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  return (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const auto id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

PauliRep PauliRep::interaction(const Matrix3& m) {
  PauliRep p;
  p.m = m;
  return p;
}

PauliRep PauliRep::operator+(const PauliRep& o) const {
  PauliRep r;
  r.alpha = alpha + o.alpha;
  r.local_a = local_a + o.local_a;
  r.local_b = local_b + o.local_b;
  r.m = m + o.m;
  return r;
}

PauliRep PauliRep::operator*(double s) const {
  PauliRep r;
  r.alpha = alpha * s;
  r.local_a = local_a * s;
  r.local_b = local_b * s;
  r.m = m * s;
  return r;
}

PauliRep to_pauli(const TwoQubitOperator& h) {
  if (!h.allFinite() || !is_hermitian(h, 1e-12))
    throw HluError(Reason::kNotHermitian,
                   "operator is not Hermitian; no Pauli representation");
  PauliRep p;
  p.alpha = h.trace().real() / 4.0;
  for (int i = 1; i <= 3; ++i) {
    p.local_a(i - 1) = component(h, kron(pauli(i), pauli(0)));
    p.local_b(i - 1) = component(h, kron(pauli(0), pauli(i)));
    for (int j = 1; j <= 3; ++j)
      p.m(i - 1, j - 1) = component(h, kron(pauli(i), pauli(j)));
  }
  return p;
}

TwoQubitOperator from_pauli(const PauliRep& p) {
  Matrix4c h = p.alpha * Matrix4c::Identity();
  for (int i = 1; i <= 3; ++i) {
    h += p.local_a(i - 1) * kron(pauli(i), pauli(0));
    h += p.local_b(i - 1) * kron(pauli(0), pauli(i));
    for (int j = 1; j <= 3; ++j)
      h += p.m(i - 1, j - 1) * kron(pauli(i), pauli(j));
  }
  return h;
}

SymAntisymParts split_sym_antisym(const PauliRep& p) {
  return {(p.m + p.m.transpose()) / 2.0, (p.m - p.m.transpose()) / 2.0};
}

double max_abs_diff(const PauliRep& x, const PauliRep& y) {
  double d = std::abs(x.alpha - y.alpha);
  d = std::max(d, (x.local_a - y.local_a).cwiseAbs().maxCoeff());
  d = std::max(d, (x.local_b - y.local_b).cwiseAbs().maxCoeff());
  return std::max(d, (x.m - y.m).cwiseAbs().maxCoeff());
}

// ---------------------------------------------------------------------------
// SU(2)

SU2Element::SU2Element(const Matrix2c& u) {
  if (!u.allFinite() || !is_unitary(u, 1e-9) ||
      std::abs(u.determinant() - 1.0) > 1e-9)
    throw HluError(Reason::kNotUnitary, "matrix is not an element of SU(2)");
  // Already in [[a, -b*], [b, a*]] form: keep the bits (exact round-trips).
  if (u(0, 1) == -std::conj(u(1, 0)) && u(1, 1) == std::conj(u(0, 0)) &&
      std::abs(std::norm(u(0, 0)) + std::norm(u(1, 0)) - 1.0) <= 1e-14) {
    u_ = u;
    return;
  }
  // Re-project onto [[a, -b*], [b, a*]] with |a|^2 + |b|^2 = 1.
  cplx a = 0.5 * (u(0, 0) + std::conj(u(1, 1)));
  cplx b = 0.5 * (u(1, 0) - std::conj(u(0, 1)));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  u_ << a, -std::conj(b), b, std::conj(a);
}

SU2Element SU2Element::pauli_rotation(int k) {
  return SU2Element(Matrix2c(-kI * pauli(k)));
}

SU2Element SU2Element::rotation(const Vector3& axis, double angle) {
  const Vector3 n = axis.normalized();
  Matrix2c u = std::cos(angle / 2) * pauli(0);
  for (int k = 0; k < 3; ++k)
    u -= kI * std::sin(angle / 2) * n(k) * pauli(k + 1);
  return SU2Element(u);
}

SU2Element SU2Element::adjoint() const {
  return SU2Element(Matrix2c(u_.adjoint()));
}

SU2Element SU2Element::operator*(const SU2Element& o) const {
  return SU2Element(Matrix2c(u_ * o.u_));
}

bool SU2Element::same_conjugation(const SU2Element& o, double tol) const {
  return (u_ - o.u_).cwiseAbs().maxCoeff() <= tol ||
         (u_ + o.u_).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// SO(3)

SO3Rotation::SO3Rotation(const Matrix3& r) : r_(r) {
  if (!r.allFinite() ||
      (r.transpose() * r - Matrix3::Identity()).cwiseAbs().maxCoeff() > 1e-9 ||
      std::abs(r.determinant() - 1.0) > 1e-9)
    throw HluError(Reason::kShape, "matrix is not an element of SO(3)");
}

SO3Rotation SO3Rotation::about(const Vector3& axis, double angle) {
  return SO3Rotation(Eigen::AngleAxisd(angle, axis.normalized()).matrix());
}

SO3Rotation SO3Rotation::transpose() const {
  return SO3Rotation(Matrix3(r_.transpose()));
}

SO3Rotation SO3Rotation::operator*(const SO3Rotation& o) const {
  return SO3Rotation(Matrix3(r_ * o.r_));
}

SO3Rotation su2_to_so3(const SU2Element& u) {
  const Matrix2c& m = u.matrix();
  Matrix3 r;
  for (int i = 1; i <= 3; ++i) {
    const Matrix2c conj = m * pauli(i) * m.adjoint();
    for (int j = 1; j <= 3; ++j)
      r(j - 1, i - 1) = (pauli(j) * conj).trace().real() / 2.0;
  }
  return SO3Rotation(r);
}

SU2Element so3_to_su2(const SO3Rotation& rot) {
  const Matrix3& r = rot.matrix();
  // u = w I - i (x s_x + y s_y + z s_z) with w = cos(theta/2) >= 0.
  const double tr = r.trace();
  double w = 0, x = 0, y = 0, z = 0;
  // cos(theta) = (tr - 1)/2; once it is negative the antisymmetric part
  // shrinks like sin(theta) and the axis comes from the diagonal instead.
  if (tr >= 1.0) {
    w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
    x = (r(2, 1) - r(1, 2)) / (4 * w);
    y = (r(0, 2) - r(2, 0)) / (4 * w);
    z = (r(1, 0) - r(0, 1)) / (4 * w);
  } else {
    const Vector3 d = r.diagonal();
    int k = 0;
    d.maxCoeff(&k);
    const double s = 0.5 * std::sqrt(std::max(0.0, 1.0 + 2 * d(k) - tr));
    Vector3 axis;
    axis(k) = s;
    const int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
    axis(k1) = (r(k1, k) + r(k, k1)) / (4 * s);
    axis(k2) = (r(k2, k) + r(k, k2)) / (4 * s);
    w = (r(k2, k1) - r(k1, k2)) / (4 * s);
    if (w < 0) {
      w = -w;
      axis = -axis;
    }
    x = axis(0);
    y = axis(1);
    z = axis(2);
  }
  Matrix2c u = w * pauli(0) - kI * (x * pauli(1) + y * pauli(2) + z * pauli(3));
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  return SU2Element(Matrix2c(u / n));
}

Matrix4c homogeneous(const SU2Element& u) { return kron(u.matrix(), u.matrix()); }

Matrix4c local_pair(const SU2Element& a, const SU2Element& b) {
  return kron(a.matrix(), b.matrix());
}

PauliRep conjugate(const PauliRep& p, const SU2Element& w) {
  const Matrix3 r = su2_to_so3(w).matrix();
  PauliRep out;
  out.alpha = p.alpha;
  out.local_a = r * p.local_a;
  out.local_b = r * p.local_b;
  out.m = r * p.m * r.transpose();
  return out;
}

}  // namespace hlu
