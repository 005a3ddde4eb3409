// Copyright 2026 The exact1q developers
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

#include <nlohmann/json.hpp>

#include "exact1q/circuit.hpp"

namespace exact1q {

/// Circuit files:
///   { "n": ..., "K": ..., "T": ...,
///     "field": "float" | "qsqrt2",
///     "unitaries": [matrix, ...],            // T+1 row-major matrices
///     "measurement": { "type": "projective" | "povm", "E1": matrix } }
/// A float scalar is [re, im]; a qsqrt2 scalar is
/// [[a_num,a_den],[b_num,b_den],[c_num,c_den],[d_num,d_den]] encoding
/// (a + b*sqrt(2)) + (c + d*sqrt(2))i. Loading validates the circuit.
AnyCircuit circuit_from_json(const nlohmann::json& j);
nlohmann::json circuit_to_json(const AnyCircuit& c);
nlohmann::json circuit_to_json(const FloatCircuit& c);
nlohmann::json circuit_to_json(const ExactCircuit& c);

AnyCircuit load_circuit_file(const std::string& path);
void save_circuit_file(const std::string& path, const AnyCircuit& c);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace exact1q
