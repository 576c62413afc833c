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

namespace hlu {

/// exp(-i h t) for Hermitian h, through its eigendecomposition.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& h, double t);

/// Matrix power by repeated squaring; n >= 0.
Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, long n);

/**
 * min over phi of ||v - e^{i phi} u||_F. The optimal phase is arg tr(u^dag v).
 */
double phase_invariant_distance(const Eigen::MatrixXcd& u,
                                const Eigen::MatrixXcd& v);

/// |tr(u^dag v)| / dim.
double gate_fidelity(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

}  // namespace hlu
