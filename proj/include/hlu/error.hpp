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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hlu {

/**
 * Machine-readable failure reasons. Each reason belongs to one of two
 * categories: malformed input, or a well-formed request that the control
 * model cannot realise.
 */
enum class Reason {
  // input errors
  kNotHermitian,
  kNotUnitary,
  kShape,
  kParse,
  kSchema,
  // infeasible requests
  kInfeasible,
  kMajorizationViolated,
  kIsotropicFixedPoint,
  kTraceSignMismatch,
  kTracelessObstruction,
  kSymmetryClass,
  kAsymmetricGate,
  kUnequalLocalTerms,
  kWindowExhausted,
  kUnsupported,
};

enum class ReasonCategory { kInput, kInfeasible };

constexpr ReasonCategory category(Reason r) {
  switch (r) {
    case Reason::kNotHermitian:
    case Reason::kNotUnitary:
    case Reason::kShape:
    case Reason::kParse:
    case Reason::kSchema:
      return ReasonCategory::kInput;
    default:
      return ReasonCategory::kInfeasible;
  }
}

constexpr std::string_view reason_code(Reason r) {
  switch (r) {
    case Reason::kNotHermitian: return "not-hermitian";
    case Reason::kNotUnitary: return "not-unitary";
    case Reason::kShape: return "shape";
    case Reason::kParse: return "parse-error";
    case Reason::kSchema: return "schema-violation";
    case Reason::kInfeasible: return "infeasible";
    case Reason::kMajorizationViolated: return "majorization-violated";
    case Reason::kIsotropicFixedPoint: return "isotropic fixed point";
    case Reason::kTraceSignMismatch: return "trace-sign-mismatch";
    case Reason::kTracelessObstruction: return "traceless-obstruction";
    case Reason::kSymmetryClass: return "symmetry-class-mismatch";
    case Reason::kAsymmetricGate: return "asymmetric-gate";
    case Reason::kUnequalLocalTerms: return "unequal-local-terms";
    case Reason::kWindowExhausted: return "infeasible-in-window";
    case Reason::kUnsupported: return "unsupported";
  }
  return "unknown";
}

class HluError : public std::runtime_error {
 public:
  HluError(Reason reason, const std::string& what)
      : std::runtime_error(std::string(reason_code(reason)) + ": " + what),
        reason_(reason) {}

  Reason reason() const { return reason_; }
  bool is_infeasible() const {
    return category(reason_) == ReasonCategory::kInfeasible;
  }

 private:
  Reason reason_;
};

}  // namespace hlu
