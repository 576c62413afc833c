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

#include <string>

#include "json.hpp"

#include "hlu/pauli.hpp"
#include "hlu/protocol.hpp"
#include "hlu/simulation.hpp"
#include "hlu/synthesis.hpp"

namespace hlu::io {

using Json = nlohmann::json;

// Complex numbers are [re, im] pairs, matrices row-major arrays of rows.
// Parsing errors raise Reason::kParse, malformed documents Reason::kSchema.

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& doc);

/// Either {"pauli": {...}} or {"matrix": 4x4}; the matrix must be Hermitian.
PauliRep hamiltonian_from_json(const Json& doc);
Json hamiltonian_to_json(const PauliRep& h);

TwoQubitOperator gate_from_json(const Json& doc);
Json gate_to_json(const TwoQubitOperator& u);

HluProtocol protocol_from_json(const Json& doc);
Json protocol_to_json(const HluProtocol& p);

SynthesisPlan plan_from_json(const Json& doc);
Json plan_to_json(const SynthesisPlan& plan);

Json report_to_json(const VerificationReport& r);

}  // namespace hlu::io
