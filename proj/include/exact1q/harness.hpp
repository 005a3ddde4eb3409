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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exact1q/truth_table.hpp"

namespace exact1q {

/// One function where the three routes disagreed. An empty mismatch list is
/// the executable form of the characterization theorem.
struct Mismatch {
    std::string table;
    std::string classifier;
    bool lp_feasible = false;
    std::optional<bool> synthesis_exact;  // set when the classifier admits synthesis

    nlohmann::json to_json() const;
};

struct VerificationReport {
    int n = 0;
    uint64_t total_functions = 0;
    uint64_t constants = 0;
    uint64_t exact_one_query = 0;
    uint64_t dictator_count = 0;
    uint64_t parity_count = 0;
    std::vector<Mismatch> mismatches;
    double wall_time_seconds = 0.0;

    /// Byte-stable across runs and job counts: wall time is reported only in
    /// human-readable output, never here.
    nlohmann::json to_json() const;
};

/// Exhaustive sweep over all total functions on n in {1..4} variables:
/// classifier verdict, LP feasibility and (where applicable) certified
/// synthesis must agree for every function. `jobs` parallelizes over
/// function ranges; results are merged in index order and never depend on
/// the job count.
VerificationReport verify_theorem(int n, int jobs = 1);

/// Sampling fallback past the exhaustive ceiling (n = 5): checks
/// classifier/LP agreement on `samples` uniformly random total functions.
/// Synthesis is exercised for classified family members as usual.
VerificationReport sample_agreement(int n, uint64_t samples, uint64_t seed, int jobs = 1);

struct CorpusEntry {
    std::string name;
    std::string table;
};

/// Bundled named tables: every two-variable function, the usual three-bit
/// suspects and the constant-vs-balanced promise tables.
const std::vector<CorpusEntry>& golden_corpus();
std::optional<std::string> corpus_lookup(const std::string& name);

}  // namespace exact1q
