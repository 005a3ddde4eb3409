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

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "exact1q/characterize.hpp"
#include "exact1q/harness.hpp"

using namespace exact1q;

TEST_CASE("exhaustive sweep counts", "[harness]") {
    // 2n dictators and n(n-1) parity pairs, negations included.
    VerificationReport r1 = verify_theorem(1);
    CHECK(r1.total_functions == 4);
    CHECK(r1.constants == 2);
    CHECK(r1.exact_one_query == 2);
    CHECK(r1.mismatches.empty());

    VerificationReport r2 = verify_theorem(2);
    CHECK(r2.total_functions == 16);
    CHECK(r2.exact_one_query == 6);
    CHECK(r2.dictator_count == 4);
    CHECK(r2.parity_count == 2);
    CHECK(r2.mismatches.empty());

    VerificationReport r3 = verify_theorem(3);
    CHECK(r3.total_functions == 256);
    CHECK(r3.exact_one_query == 12);
    CHECK(r3.mismatches.empty());

    for (const VerificationReport& r : {r1, r2, r3}) {
        uint64_t n = static_cast<uint64_t>(r.n);
        CHECK(r.exact_one_query == 2 * n + n * (n - 1));
        CHECK(r.exact_one_query == r.dictator_count + r.parity_count);
        CHECK(r.constants == 2);
    }

    CHECK_THROWS_AS(verify_theorem(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(5), std::invalid_argument);
}

TEST_CASE("job count never changes the report", "[harness]") {
    nlohmann::json base = verify_theorem(3, 1).to_json();
    for (int jobs : {2, 4, 7}) {
        CHECK(verify_theorem(3, jobs).to_json() == base);
    }
    CHECK(base.dump() == verify_theorem(3, 3).to_json().dump());
}

TEST_CASE("sampling mode", "[harness]") {
    VerificationReport r = sample_agreement(5, 300, 0);
    CHECK(r.total_functions == 300);
    CHECK(r.mismatches.empty());

    // Same seed, same report; different job count, same report.
    CHECK(sample_agreement(5, 100, 42).to_json() == sample_agreement(5, 100, 42, 4).to_json());

    CHECK_THROWS_AS(sample_agreement(6, 10, 0), std::invalid_argument);
}

TEST_CASE("report JSON shape", "[harness]") {
    nlohmann::json j = verify_theorem(2).to_json();
    CHECK(j["n"] == 2);
    CHECK(j["total_functions"] == 16);
    CHECK(j["constants"] == 2);
    CHECK(j["exact_one_query"] == 6);
    CHECK(j["dictator_count"] == 4);
    CHECK(j["parity_count"] == 2);
    CHECK(j["mismatches"].is_array());
    CHECK(j["mismatches"].empty());
    CHECK_FALSE(j.contains("wall_time"));  // kept out for byte-stable output
}

TEST_CASE("golden corpus", "[harness]") {
    // Formula-derived oracles for the named tables.
    TruthTable fig2 = TruthTable::from_function(3, [](uint32_t x) {
        int x1 = (x >> 2) & 1, x2 = (x >> 1) & 1, x3 = x & 1;
        return x1 & (x2 | x3);
    });
    CHECK(corpus_lookup("fig2") == fig2.str());

    TruthTable maj = TruthTable::from_function(3, [](uint32_t x) {
        int ones = ((x >> 2) & 1) + ((x >> 1) & 1) + (x & 1);
        return ones >= 2 ? 1 : 0;
    });
    CHECK(corpus_lookup("majority3") == maj.str());

    TruthTable par3 = TruthTable::from_function(3, [](uint32_t x) {
        return (((x >> 2) ^ (x >> 1) ^ x) & 1u) ? 1 : 0;
    });
    CHECK(corpus_lookup("parity3") == par3.str());

    CHECK(corpus_lookup("deutsch") == "0110");
    CHECK(corpus_lookup("and2") == "0001");
    CHECK(corpus_lookup("dj2") == deutsch_jozsa(2).table.str());
    CHECK(corpus_lookup("dj4") == deutsch_jozsa(4).table.str());
    CHECK_FALSE(corpus_lookup("no_such_table").has_value());

    // All sixteen two-variable functions present under distinct names.
    std::set<std::string> n2_tables;
    for (const CorpusEntry& e : golden_corpus()) {
        TruthTable t = TruthTable::parse(e.table);  // every entry parses
        if (t.n() == 2 && t.is_total()) {
            n2_tables.insert(e.table);
        }
    }
    CHECK(n2_tables.size() == 16);
}
