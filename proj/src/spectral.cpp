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

#include "hlu/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hlu/error.hpp"

namespace hlu {

namespace {

constexpr double kExact = 1e-12;

std::array<int, 3> descending_order(const Vector3& v) {
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return v(a) > v(b); });
  return idx;
}

int moved_count(const Permutation& p) {
  int n = 0;
  for (int j = 0; j < 3; ++j)
    if (p.to[static_cast<std::size_t>(j)] != j) ++n;
  return n;
}

Vector3 sorted_descending(const Vector3& v) {
  const auto idx = descending_order(v);
  return {v(idx[0]), v(idx[1]), v(idx[2])};
}

double scale_of(const Vector3& a, const Vector3& b) {
  return std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
}

// D with y = D x for sorted x majorizing sorted y, as a product of
// T-transforms (1 - t) I + t Q_jk.
Matrix3 t_transform_chain(Vector3 x, const Vector3& y, double tol) {
  Matrix3 d = Matrix3::Identity();
  for (int step = 0; step < 3; ++step) {
    int j = -1;
    for (int i = 2; i >= 0; --i)
      if (x(i) > y(i) + tol) {
        j = i;
        break;
      }
    if (j < 0) break;
    int k = -1;
    for (int i = j + 1; i < 3; ++i)
      if (x(i) < y(i) - tol) {
        k = i;
        break;
      }
    if (k < 0) break;
    const double delta = std::min(x(j) - y(j), y(k) - x(k));
    const double t = delta / (x(j) - x(k));
    Matrix3 tr = Matrix3::Identity();
    tr(j, j) = tr(k, k) = 1.0 - t;
    tr(j, k) = tr(k, j) = t;
    x = tr * x;
    d = tr * d;
  }
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::transposition(int a, int b) {
  Permutation p;
  std::swap(p.to[static_cast<std::size_t>(a)], p.to[static_cast<std::size_t>(b)]);
  return p;
}

const std::array<Permutation, 6>& Permutation::all() {
  static const std::array<Permutation, 6> perms = [] {
    std::array<Permutation, 6> out;
    std::array<int, 3> to{0, 1, 2};
    std::size_t i = 0;
    do {
      out[i++].to = to;
    } while (std::next_permutation(to.begin(), to.end()));
    return out;
  }();
  return perms;
}

Matrix3 Permutation::matrix() const {
  Matrix3 p = Matrix3::Zero();
  for (int j = 0; j < 3; ++j) p(to[static_cast<std::size_t>(j)], j) = 1.0;
  return p;
}

Vector3 Permutation::apply(const Vector3& v) const {
  Vector3 out;
  for (int j = 0; j < 3; ++j) out(to[static_cast<std::size_t>(j)]) = v(j);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  for (int j = 0; j < 3; ++j) inv.to[static_cast<std::size_t>(to[static_cast<std::size_t>(j)])] = j;
  return inv;
}

bool Permutation::is_even() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (to[static_cast<std::size_t>(i)] > to[static_cast<std::size_t>(j)]) ++inversions;
  return inversions % 2 == 0;
}

std::string Permutation::name() const {
  int fixed = 0;
  for (int j = 0; j < 3; ++j)
    if (to[static_cast<std::size_t>(j)] == j) ++fixed;
  if (fixed == 3) return "id";
  if (fixed == 1) {
    std::string s = "swap(";
    bool first = true;
    for (int j = 0; j < 3; ++j)
      if (to[static_cast<std::size_t>(j)] != j) {
        s += (first ? "" : ",") + std::to_string(j + 1);
        first = false;
      }
    return s + ")";
  }
  return "cycle(1->" + std::to_string(to[0] + 1) + "->" +
         std::to_string(to[static_cast<std::size_t>(to[0])] + 1) + ")";
}

// ---------------------------------------------------------------------------
// Doubly stochastic matrices and mixings

DoublyStochastic::DoublyStochastic(const Matrix3& d) : d_(d) {
  if (!d.allFinite() || d.minCoeff() < -kExact)
    throw HluError(Reason::kShape, "doubly stochastic matrix has negative entries");
  const double row_err = (d.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double col_err = (d.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (row_err > 1e-10 || col_err > 1e-10)
    throw HluError(Reason::kShape, "row or column sums differ from 1");
}

Matrix3 PermutationMixing::matrix() const {
  Matrix3 d = Matrix3::Zero();
  for (const auto& t : terms) d += t.weight * t.perm.matrix();
  return d;
}

Vector3 PermutationMixing::apply(const Vector3& v) const {
  return matrix() * v;
}

// ---------------------------------------------------------------------------
// Spectra

Eigensystem symm_eigenvalues(const Matrix3& m_s) {
  const double scale = std::max(1.0, m_s.cwiseAbs().maxCoeff());
  if (!m_s.allFinite() ||
      (m_s - m_s.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw HluError(Reason::kShape, "matrix is not symmetric");

  Matrix3 a = (m_s + m_s.transpose()) / 2.0;
  Matrix3 v = Matrix3::Identity();
  auto off_norm = [](const Matrix3& x) {
    return std::sqrt(2.0 * (x(0, 1) * x(0, 1) + x(0, 2) * x(0, 2) +
                            x(1, 2) * x(1, 2)));
  };
  for (int sweep = 0; sweep < 64 && off_norm(a) > 1e-13 * scale; ++sweep) {
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Matrix3 j = Matrix3::Identity();
        j(p, p) = c;
        j(q, q) = c;
        j(p, q) = s;
        j(q, p) = -s;
        a = j.transpose() * a * j;
        v = v * j;
      }
  }

  const Vector3 diag = a.diagonal();
  const auto order = descending_order(diag);
  Eigensystem out;
  Matrix3 frame;
  for (int r = 0; r < 3; ++r) {
    out.values(r) = diag(order[static_cast<std::size_t>(r)]);
    frame.row(r) = v.col(order[static_cast<std::size_t>(r)]).transpose();
  }
  if (frame.determinant() < 0) frame.row(2) *= -1.0;
  out.frame = SO3Rotation(frame);
  return out;
}

bool majorizes(const LambdaVector& target, const LambdaVector& source,
               double tol) {
  const Vector3 t = sorted_descending(target);
  const Vector3 s = sorted_descending(source);
  const double eps = tol * scale_of(t, s);
  if (t(0) > s(0) + eps) return false;
  if (t(0) + t(1) > s(0) + s(1) + eps) return false;
  return std::abs(t.sum() - s.sum()) <= eps;
}

double required_overhead(const LambdaVector& lambda_src,
                         const LambdaVector& lambda_tgt) {
  const double eps = kExact * scale_of(lambda_src, lambda_tgt);
  const double src_sum = lambda_src.sum();
  const double tgt_sum = lambda_tgt.sum();
  if (std::abs(src_sum) > eps) {
    double c = tgt_sum / src_sum;
    if (c < 0) {
      if (c > -eps) return 0.0;
      throw HluError(Reason::kTraceSignMismatch,
                     "target and source traces have opposite signs");
    }
    return c;
  }
  if (std::abs(tgt_sum) > eps)
    throw HluError(Reason::kTracelessObstruction,
                   "traceless source cannot reach a target with non-zero trace");
  const Vector3 s = sorted_descending(lambda_src);
  const Vector3 t = sorted_descending(lambda_tgt);
  double c = 0.0;
  double s_partial = 0.0, t_partial = 0.0;
  for (int k = 0; k < 2; ++k) {
    s_partial += s(k);
    t_partial += t(k);
    if (s_partial <= eps) {
      if (t_partial > eps)
        throw HluError(Reason::kInfeasible,
                       "zero source spectrum cannot reach a non-zero target");
      continue;
    }
    c = std::max(c, t_partial / s_partial);
  }
  return c;
}

PermutationMixing construct_mixing(const LambdaVector& lambda_src,
                                   const LambdaVector& lambda_tgt, double c) {
  const Vector3 x = c * lambda_src;
  if (!majorizes(lambda_tgt, x))
    throw HluError(Reason::kMajorizationViolated,
                   "target spectrum is not majorized by c * source spectrum");
  const auto ox = descending_order(x);
  const auto oy = descending_order(lambda_tgt);
  const Vector3 xs{x(ox[0]), x(ox[1]), x(ox[2])};
  const Vector3 ys{lambda_tgt(oy[0]), lambda_tgt(oy[1]), lambda_tgt(oy[2])};
  const Matrix3 ds = t_transform_chain(xs, ys, kExact * scale_of(xs, ys));

  Matrix3 d = Matrix3::Zero();
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      d(oy[static_cast<std::size_t>(r)], ox[static_cast<std::size_t>(s)]) = ds(r, s);
  const PermutationMixing raw = birkhoff_decompose(DoublyStochastic(d));

  // Permutations with the same image of x are interchangeable; merge them
  // into one representative per image, preferring fewer moved coordinates.
  const double img_tol = kExact * scale_of(x, lambda_tgt);
  auto same_image = [&](const Permutation& a, const Permutation& b) {
    return (a.apply(x) - b.apply(x)).cwiseAbs().maxCoeff() <= img_tol;
  };
  PermutationMixing mix;
  for (const auto& t : raw.terms) {
    Permutation rep = t.perm;
    for (const auto& p : Permutation::all())
      if (same_image(p, t.perm) &&
          std::pair(moved_count(p), p) < std::pair(moved_count(rep), rep))
        rep = p;
    auto it = std::find_if(mix.terms.begin(), mix.terms.end(),
                           [&](const PermutationTerm& m) { return m.perm == rep; });
    if (it != mix.terms.end())
      it->weight += t.weight;
    else
      mix.terms.push_back({t.weight, rep});
  }
  std::sort(mix.terms.begin(), mix.terms.end(),
            [](const PermutationTerm& a, const PermutationTerm& b) { return a.perm < b.perm; });

  const double err = (mix.apply(x) - lambda_tgt).cwiseAbs().maxCoeff();
  if (err > 1e-9 * scale_of(x, lambda_tgt))
    throw HluError(Reason::kMajorizationViolated,
                   "permutation mixing misses the target spectrum");
  return mix;
}

PermutationMixing birkhoff_decompose(const DoublyStochastic& ds) {
  Matrix3 residual = ds.matrix();
  PermutationMixing mix;
  const auto& perms = Permutation::all();

  for (int iter = 0; iter < 9 && residual.maxCoeff() > kExact; ++iter) {
    // smallest positive entry, first in row-major order
    int mi = -1, mj = -1;
    double mv = 2.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (residual(i, j) > kExact && residual(i, j) < mv - kExact) {
          mv = residual(i, j);
          mi = i;
          mj = j;
        }
    const Permutation* best = nullptr;
    double best_w = 0.0;
    for (const auto& p : perms) {
      if (p.to[static_cast<std::size_t>(mj)] != mi) continue;
      double w = 2.0;
      for (int j = 0; j < 3; ++j)
        w = std::min(w, residual(p.to[static_cast<std::size_t>(j)], j));
      if (w > kExact && w > best_w + kExact) {
        best_w = w;
        best = &p;
      }
    }
    if (best == nullptr) break;
    residual -= best_w * best->matrix();
    auto it = std::find_if(mix.terms.begin(), mix.terms.end(),
                           [&](const PermutationTerm& t) { return t.perm == *best; });
    if (it != mix.terms.end())
      it->weight += best_w;
    else
      mix.terms.push_back({best_w, *best});
  }

  // The three even and the three odd permutation matrices have the same sum,
  // so a six-term decomposition can always shed one term.
  if (mix.terms.size() == 6) {
    double min_even = 2.0, min_odd = 2.0;
    for (const auto& t : mix.terms) {
      double& slot = t.perm.is_even() ? min_even : min_odd;
      slot = std::min(slot, t.weight);
    }
    const bool drain_even = min_even <= min_odd;
    const double shift = drain_even ? min_even : min_odd;
    for (auto& t : mix.terms)
      t.weight += (t.perm.is_even() == drain_even) ? -shift : shift;
    std::erase_if(mix.terms, [](const PermutationTerm& t) { return t.weight <= kExact; });
  }

  double total = 0.0;
  for (const auto& t : mix.terms) total += t.weight;
  for (auto& t : mix.terms) t.weight /= total;
  return mix;
}

SO3Rotation permutation_to_rotation(const Permutation& p) {
  if (p.is_even()) return SO3Rotation(p.matrix());
  int axis = 0;
  for (int j = 0; j < 3; ++j)
    if (p.to[static_cast<std::size_t>(j)] == j) axis = j;
  Vector3 n = Vector3::Zero();
  n(axis) = 1.0;
  Matrix3 r = Eigen::AngleAxisd(std::numbers::pi / 2, n).matrix();
  // AngleAxis leaves ~1e-17 residue in the zero entries.
  r = r.array().round().matrix();
  return SO3Rotation(r);
}

}  // namespace hlu
