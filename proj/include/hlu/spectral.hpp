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

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "hlu/pauli.hpp"

namespace hlu {

/// Ordered triple of real coefficients: a spectrum or a canonical vector.
using LambdaVector = Vector3;

/**
 * Permutation of three coordinates. `to[j]` is the row holding the 1 in
 * column j of the permutation matrix, so P e_j = e_{to[j]}. Ordering is
 * lexicographic on `to`.
 */
struct Permutation {
  std::array<int, 3> to{0, 1, 2};

  static Permutation identity() { return {}; }
  /// Exchange of coordinates a and b (zero-based).
  static Permutation transposition(int a, int b);
  /// All six permutations in lexicographic order.
  static const std::array<Permutation, 6>& all();

  Matrix3 matrix() const;
  Vector3 apply(const Vector3& v) const;
  Permutation inverse() const;
  bool is_even() const;
  std::string name() const;

  auto operator<=>(const Permutation&) const = default;
};

/// Validated 3x3 doubly stochastic matrix.
class DoublyStochastic {
 public:
  /// Throws Reason::kShape on negative entries or row/column sums != 1.
  explicit DoublyStochastic(const Matrix3& d);
  const Matrix3& matrix() const { return d_; }

 private:
  Matrix3 d_;
};

struct PermutationTerm {
  double weight = 0.0;
  Permutation perm;
};

struct PermutationMixing {
  std::vector<PermutationTerm> terms;

  Matrix3 matrix() const;
  Vector3 apply(const Vector3& v) const;
};

struct Eigensystem {
  LambdaVector values;  // descending
  SO3Rotation frame;    // frame^T diag(values) frame = m
};

/// Cyclic Jacobi diagonalisation of a real symmetric 3x3 matrix.
Eigensystem symm_eigenvalues(const Matrix3& m_s);

/**
 * True iff `target` is majorized by `source`: descending partial sums of
 * target bounded by those of source, equal totals. Tolerance on sums.
 */
bool majorizes(const LambdaVector& target, const LambdaVector& source,
               double tol = 1e-9);

/**
 * Time overhead c for simulating a spectrum `lambda_tgt` from
 * `lambda_src`. Forced to the trace ratio when the source has non-zero
 * trace; for traceless pairs it is the smallest c with tgt majorized by
 * c * src. Feasibility is not checked beyond the trace condition.
 */
double required_overhead(const LambdaVector& lambda_src,
                         const LambdaVector& lambda_tgt);

/**
 * Convex combination of coordinate permutations with
 * sum_k p_k P_k (c lambda_src) = lambda_tgt, built from at most two
 * T-transforms and re-expressed through birkhoff_decompose.
 */
PermutationMixing construct_mixing(const LambdaVector& lambda_src,
                                   const LambdaVector& lambda_tgt, double c);

/// Greedy Birkhoff decomposition with at most five terms.
PermutationMixing birkhoff_decompose(const DoublyStochastic& d);

/**
 * Rotation whose squared entries reproduce the permutation matrix. Even
 * permutations are rotations already; a transposition of two axes becomes a
 * quarter turn about the remaining one.
 */
SO3Rotation permutation_to_rotation(const Permutation& p);

}  // namespace hlu
