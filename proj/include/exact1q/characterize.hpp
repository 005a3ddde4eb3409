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

#include <variant>

#include <nlohmann/json.hpp>

#include "exact1q/circuit.hpp"
#include "exact1q/truth_table.hpp"

namespace exact1q {

/// Trichotomy over total functions: constants, f = x_i (+ negation),
/// f = x_i ^ x_j (+ negation), and everything else, which no one-query
/// circuit computes exactly.
struct Constant {
    int value = 0;
};
struct Dictator {
    int i = 0;
    int negated = 0;
};
struct ParityPair {
    int i = 0;  // i < j
    int j = 0;
    int negated = 0;
};
struct NotExactOneQuery {
    enum class Reason { DependsOnTooMany, AndTypeOnTwo };
    Reason reason = Reason::DependsOnTooMany;
    int dependent_count = 0;  // meaningful for DependsOnTooMany
};

using Classification = std::variant<Constant, Dictator, ParityPair, NotExactOneQuery>;

/// Decides which of the four families a total function belongs to.
Classification classify(const TruthTable& f);

/// True for Dictator and ParityPair.
bool in_exact_one_query_family(const Classification& cl);

/// Builds the certifying one-query circuit (T=1, K=1, exact field) for a
/// Dictator or ParityPair classification on n variables. Dictators write
/// x_i into the target bit and measure it; parity pairs run the Deutsch
/// preparation (+-phase states over blocks i and j) and distinguish the two
/// orthogonal post-query states projectively.
ExactCircuit synthesize(const Classification& cl, int n);

/// classify + synthesize + exact simulation, end to end.
bool verify_family(const TruthTable& f);

struct DeutschJozsaDemo {
    TruthTable table;  // partial: domain = constant and balanced strings
    ExactCircuit circuit;
};

/// The constant-vs-balanced promise over oracle strings of even length
/// n in {2, 4}: f = 0 on 0^n and 1^n, f = 1 on strings with n/2 ones,
/// undefined elsewhere. The returned one-query circuit is exact on the
/// whole promise domain.
DeutschJozsaDemo deutsch_jozsa(int n);

nlohmann::json classification_to_json(const Classification& cl);

}  // namespace exact1q
