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

#include "hlu/antisym.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hlu/error.hpp"

namespace hlu {

AxialVector pauli_vector(const Matrix3& m_a) {
  const double scale = std::max(1.0, m_a.cwiseAbs().maxCoeff());
  if (!m_a.allFinite() ||
      (m_a + m_a.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw HluError(Reason::kShape, "matrix is not antisymmetric");
  return {m_a(1, 2) - m_a(2, 1), m_a(2, 0) - m_a(0, 2), m_a(0, 1) - m_a(1, 0)};
}

Matrix3 antisymmetric_from_vector(const AxialVector& v) {
  Matrix3 m;
  m << 0, v(2), -v(1),  //
      -v(2), 0, v(0),   //
      v(1), -v(0), 0;
  return m / 2.0;
}

double antisym_overhead(const AxialVector& v_src, const AxialVector& v_tgt) {
  const double ns = v_src.norm();
  const double nt = v_tgt.norm();
  if (nt == 0.0) return 0.0;
  if (ns == 0.0)
    throw HluError(Reason::kInfeasible,
                   "zero antisymmetric source cannot simulate a non-zero target");
  return nt / ns;
}

SO3Rotation align(const Vector3& from, const Vector3& to) {
  const Vector3 a = from.normalized();
  const Vector3 b = to.normalized();
  const Vector3 axis = a.cross(b);
  const double s = axis.norm();
  const double c = a.dot(b);
  if (s > 1e-12) return SO3Rotation::about(axis / s, std::atan2(s, c));
  if (c > 0) return SO3Rotation::identity();
  // Antiparallel: half turn about the first basis direction not along a,
  // orthogonalised against a.
  for (int k = 0; k < 3; ++k) {
    Vector3 e = Vector3::Unit(k);
    if (std::abs(e.dot(a)) < 1.0 - 1e-9) {
      const Vector3 perp = (e - e.dot(a) * a).normalized();
      return SO3Rotation::about(perp, std::numbers::pi);
    }
  }
  return SO3Rotation::identity();  // unreachable for a unit vector
}

std::vector<RotationTerm> construct_rotation_mixing(const AxialVector& v_src,
                                                    const AxialVector& v_tgt,
                                                    double c) {
  const double ns = v_src.norm();
  const double nt = v_tgt.norm();
  const double scale = std::max({1.0, ns, nt});
  if (c < 0 || nt > c * ns + 1e-10 * scale)
    throw HluError(Reason::kInfeasible,
                   "antisymmetric target exceeds c times the source modulus");
  if (nt == 0.0 && (c == 0.0 || ns == 0.0))
    return {{1.0, SO3Rotation::identity()}};

  const Vector3 dir = nt > 0.0 ? Vector3(v_tgt / nt) : Vector3(v_src / ns);
  const double p = std::min(1.0, 0.5 * (1.0 + nt / (c * ns)));
  std::vector<RotationTerm> mix{{p, align(v_src, dir)}};
  if (1.0 - p > 1e-15) mix.push_back({1.0 - p, align(v_src, -dir)});
  return mix;
}

}  // namespace hlu
