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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <random>
#include <utility>

namespace hlu {

using cplx = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;

/// 4x4 operator on qubits A (first tensor factor) and B.
using TwoQubitOperator = Matrix4c;

/**
 * Pauli matrices in the computational basis. Index 0 is the identity and
 * 1, 2, 3 are sigma_x, sigma_y, sigma_z. Every Pauli index in the library
 * uses this convention.
 */
const Matrix2c& pauli(int k);

Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

/// The swap operator S |a>|b> = |b>|a>.
const Matrix4c& swap_operator();

bool is_hermitian(const Eigen::MatrixXcd& h, double tol = 1e-12);
bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

/**
 * Pauli representation of a two-qubit Hermitian operator:
 *
 *   H = alpha I(x)I + sum_i a_i s_i(x)I + sum_j b_j I(x)s_j
 *       + sum_ij m_ij s_i(x)s_j
 */
struct PauliRep {
  double alpha = 0.0;
  Vector3 local_a = Vector3::Zero();
  Vector3 local_b = Vector3::Zero();
  Matrix3 m = Matrix3::Zero();

  static PauliRep interaction(const Matrix3& m);
  PauliRep operator+(const PauliRep& o) const;
  PauliRep operator*(double s) const;
};

/// Throws Reason::kNotHermitian if h is not Hermitian to 1e-12 (relative).
PauliRep to_pauli(const TwoQubitOperator& h);
TwoQubitOperator from_pauli(const PauliRep& p);

struct SymAntisymParts {
  Matrix3 symmetric;
  Matrix3 antisymmetric;
};
SymAntisymParts split_sym_antisym(const PauliRep& p);

/// Largest absolute entry difference between two PauliReps.
double max_abs_diff(const PauliRep& x, const PauliRep& y);

/**
 * Element of SU(2). Construction validates unitarity and unit determinant
 * (1e-9) and re-projects onto the group so that products stay exact.
 */
class SU2Element {
 public:
  SU2Element() : u_(Matrix2c::Identity()) {}
  explicit SU2Element(const Matrix2c& u);

  static SU2Element identity() { return SU2Element(); }
  /// -i sigma_k, the SU(2) representative of the Pauli conjugation.
  static SU2Element pauli_rotation(int k);
  /// exp(-i angle/2 axis.sigma) for a unit axis.
  static SU2Element rotation(const Vector3& axis, double angle);

  const Matrix2c& matrix() const { return u_; }
  SU2Element adjoint() const;
  SU2Element operator*(const SU2Element& o) const;
  /// Equal as group elements or differing only by sign.
  bool same_conjugation(const SU2Element& o, double tol = 1e-10) const;

 private:
  Matrix2c u_;
};

/// Rotation in SO(3); construction validates orthogonality and det +1.
class SO3Rotation {
 public:
  SO3Rotation() : r_(Matrix3::Identity()) {}
  explicit SO3Rotation(const Matrix3& r);

  static SO3Rotation identity() { return SO3Rotation(); }
  /// Right-handed rotation by angle about a unit axis (Rodrigues).
  static SO3Rotation about(const Vector3& axis, double angle);

  const Matrix3& matrix() const { return r_; }
  SO3Rotation transpose() const;
  SO3Rotation operator*(const SO3Rotation& o) const;

 private:
  Matrix3 r_;
};

/**
 * R with u s_i u^dag = sum_j R^T_ij s_j, i.e. column i of R holds the
 * Pauli coefficients of the conjugated s_i. Conjugating a Hamiltonian by
 * u(x)u maps its interaction matrix m to R m R^T.
 */
SO3Rotation su2_to_so3(const SU2Element& u);

/**
 * One of the two preimages of r, exp(-i theta/2 n.sigma), chosen with a
 * non-negative identity component. The axis is read from the antisymmetric
 * part of r away from theta = pi and from the diagonal of the symmetric part
 * near it.
 */
SU2Element so3_to_su2(const SO3Rotation& r);

/// Haar-random SU(2) from a normalised complex 2-vector.
template <class Rng>
SU2Element random_su2(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  cplx a(g(rng), g(rng));
  cplx b(g(rng), g(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  Matrix2c u;
  u << a, -std::conj(b), b, std::conj(a);
  return SU2Element(u);
}

/// u(x)u as a 4x4 operator.
Matrix4c homogeneous(const SU2Element& u);
Matrix4c local_pair(const SU2Element& a, const SU2Element& b);

/// (w (x) w) h (w (x) w)^dag in Pauli form, with the exact rotation action.
PauliRep conjugate(const PauliRep& p, const SU2Element& w);

}  // namespace hlu
