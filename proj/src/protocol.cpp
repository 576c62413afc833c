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

#include "hlu/protocol.hpp"

#include <cmath>

#include "hlu/error.hpp"

namespace hlu {

void check_distribution(const Mixing& mix, double tol) {
  double total = 0.0;
  for (const auto& t : mix) {
    if (!std::isfinite(t.weight) || t.weight < -tol)
      throw HluError(Reason::kSchema, "mixing weight is negative");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > tol)
    throw HluError(Reason::kSchema, "mixing weights do not sum to 1");
}

bool LocalLayer::is_homogeneous(double tol) const {
  return a.same_conjugation(b, tol);
}

void HluProtocol::validate() const {
  if (!std::isfinite(overhead) || overhead < 0)
    throw HluError(Reason::kSchema, "overhead must be finite and non-negative");
  if (!local_field.allFinite())
    throw HluError(Reason::kSchema, "local field must be finite");
  if (steps.empty()) {
    if (overhead != 0.0)
      throw HluError(Reason::kSchema, "protocol without steps must have zero overhead");
    return;
  }
  check_distribution(mixing());
}

std::vector<SU2Element> HluProtocol::pulses() const {
  std::vector<SU2Element> w;
  if (steps.empty()) return w;
  w.push_back(steps.front().conjugation.adjoint());
  for (std::size_t k = 1; k < steps.size(); ++k)
    w.push_back(steps[k].conjugation.adjoint() * steps[k - 1].conjugation);
  w.push_back(steps.back().conjugation);
  return w;
}

Mixing HluProtocol::mixing() const {
  Mixing mix;
  mix.reserve(steps.size());
  for (const auto& s : steps) mix.push_back({s.fraction, s.conjugation});
  return mix;
}

}  // namespace hlu
