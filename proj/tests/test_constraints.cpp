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

#include <random>

#include "exact1q/characterize.hpp"
#include "exact1q/constraints.hpp"

using namespace exact1q;

namespace {

std::vector<VarSet> sets_of(const std::string& table) {
    return distinguishing_sets(TruthTable::parse(table));
}

}  // namespace

TEST_CASE("distinguishing sets", "[constraints]") {
    // AND_2: 11 differs from 01, 10 and 00.
    CHECK(sets_of("0001") == std::vector<VarSet>{0b01, 0b10, 0b11});
    CHECK(sets_of("01") == std::vector<VarSet>{0b1});
    // Parity flips value iff exactly one variable flips.
    CHECK(sets_of("0110") == std::vector<VarSet>{0b01, 0b10});
    // f = x_1 on two variables: bit 1 alone or both bits.
    CHECK(sets_of("0011") == std::vector<VarSet>{0b01, 0b11});

    CHECK(sets_of("0000").empty());
    CHECK(sets_of("1***").empty());

    // Partial tables draw pairs from the domain only.
    CHECK(sets_of("0**1") == std::vector<VarSet>{0b11});
}

TEST_CASE("build_system", "[constraints]") {
    ConstraintSystem and2 = build_system(TruthTable::parse("0001"));
    CHECK(and2.n == 2);
    CHECK(and2.sets == std::vector<VarSet>{0b01, 0b10, 0b11});

    ConstraintSystem parity = build_system(TruthTable::parse("0110"));
    CHECK(parity.sets == std::vector<VarSet>{0b01, 0b10});

    CHECK_THROWS_AS(build_system(TruthTable::parse("0000")), std::invalid_argument);
    CHECK_THROWS_AS(build_system(TruthTable::parse("1111")), std::invalid_argument);

    // The flat inequality list: two rows per set, the cap, nonnegativity.
    auto rows = and2.inequalities();
    REQUIRE(rows.size() == 2 * 3 + 1 + 2);
    CHECK(rows[0].coeff == std::vector<Rational>{1, 0});
    CHECK(rows[0].rhs == 1);
    CHECK(rows[1].coeff == std::vector<Rational>{-1, 0});
    CHECK(rows[1].rhs == -1);
    CHECK(rows[6].coeff == std::vector<Rational>{1, 1});
    CHECK(rows[6].rhs == 2);
}

TEST_CASE("feasibility verdicts and artifacts", "[constraints]") {
    // AND_2 forces beta_1 = beta_2 = 1 and beta_1 + beta_2 = 1 at once.
    ConstraintSystem and2 = build_system(TruthTable::parse("0001"));
    FeasibilityResult r = lp_feasible(and2);
    CHECK_FALSE(r.feasible);
    CHECK(check_certificate(and2, r.certificate));

    ConstraintSystem parity = build_system(TruthTable::parse("0110"));
    r = lp_feasible(parity);
    REQUIRE(r.feasible);
    CHECK(r.witness == std::vector<Rational>{1, 1});
    CHECK(check_witness(parity, r.witness));

    ConstraintSystem dict = build_system(TruthTable::parse("0011"));
    r = lp_feasible(dict);
    REQUIRE(r.feasible);
    CHECK(r.witness == std::vector<Rational>{1, 0});

    // Majority-of-3 has three singleton sets forcing a total mass of 3.
    ConstraintSystem maj = build_system(TruthTable::parse("00010111"));
    r = lp_feasible(maj);
    CHECK_FALSE(r.feasible);
    CHECK(check_certificate(maj, r.certificate));
}

TEST_CASE("artifacts re-verify for every small function", "[constraints]") {
    for (int n = 1; n <= 3; ++n) {
        enumerate_all(n, [&](const TruthTable& f) {
            if (f.is_constant_on_domain()) {
                return;
            }
            ConstraintSystem cs = build_system(f);
            FeasibilityResult r = lp_feasible(cs);
            if (r.feasible) {
                REQUIRE(check_witness(cs, r.witness));
            } else {
                REQUIRE(check_certificate(cs, r.certificate));
            }
        });
    }
}

TEST_CASE("tampered artifacts fail the checks", "[constraints]") {
    ConstraintSystem parity = build_system(TruthTable::parse("0110"));
    CHECK_FALSE(check_witness(parity, {Rational(1), Rational(2)}));
    CHECK_FALSE(check_witness(parity, {Rational(1)}));

    ConstraintSystem and2 = build_system(TruthTable::parse("0001"));
    FeasibilityResult r = lp_feasible(and2);
    std::vector<Rational> cert = r.certificate;
    cert[0] -= 1;  // breaks either nonnegativity or the zero combination
    CHECK_FALSE(check_certificate(and2, cert));
    CHECK_FALSE(check_certificate(and2, std::vector<Rational>(cert.size(), 0)));
}

TEST_CASE("dependency shortcut", "[constraints]") {
    CHECK_FALSE(dependency_shortcut(TruthTable::parse("00010111")));
    CHECK(dependency_shortcut(TruthTable::parse("0110")));
    CHECK(dependency_shortcut(TruthTable::parse("01")));

    // Never contradicts the LP: shortcut false implies infeasible.
    for (int n = 1; n <= 3; ++n) {
        enumerate_all(n, [&](const TruthTable& f) {
            if (f.is_constant_on_domain()) {
                return;
            }
            if (!dependency_shortcut(f)) {
                REQUIRE_FALSE(lp_feasible(build_system(f)).feasible);
            }
        });
    }
}

TEST_CASE("dependent variables appear as singleton equalities", "[constraints]") {
    for (int n = 1; n <= 3; ++n) {
        enumerate_all(n, [&](const TruthTable& f) {
            if (f.is_constant_on_domain()) {
                return;
            }
            ConstraintSystem cs = build_system(f);
            std::vector<int> deps = dependent_set(f);
            for (int i = 1; i <= n; ++i) {
                bool dep = std::find(deps.begin(), deps.end(), i) != deps.end();
                bool singleton = std::find(cs.sets.begin(), cs.sets.end(),
                                           VarSet{1} << (i - 1)) != cs.sets.end();
                REQUIRE(dep == singleton);
            }
        });
    }
}

TEST_CASE("feasibility is a transform invariant", "[constraints]") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        TruthTable f = TruthTable::from_packed(n, rng() & ((1u << (1u << n)) - 1));
        if (f.is_constant_on_domain()) {
            continue;
        }
        Transform t = Transform::identity(n);
        std::shuffle(t.perm.begin(), t.perm.end(), rng);
        t.input_neg = static_cast<VarSet>(rng() & ((VarSet{1} << n) - 1));
        t.output_neg = static_cast<int>(rng() & 1u);
        TruthTable g = apply_transform(f, t);
        CHECK(lp_feasible(build_system(f)).feasible == lp_feasible(build_system(g)).feasible);
    }

    // Output negation leaves the pair set, and hence the system, untouched.
    TruthTable f = TruthTable::parse("0001");
    Transform neg = Transform::identity(2);
    neg.output_neg = 1;
    CHECK(build_system(f).sets == build_system(apply_transform(f, neg)).sets);
}

TEST_CASE("synthesized amplitudes satisfy their own system", "[constraints]") {
    for (int n = 1; n <= 3; ++n) {
        enumerate_all(n, [&](const TruthTable& f) {
            if (f.is_constant_on_domain()) {
                return;
            }
            Classification cl = classify(f);
            if (!in_exact_one_query_family(cl)) {
                return;
            }
            ExactCircuit c = synthesize(cl, n);
            std::vector<QSqrt2> beta = amplitude_table(c).beta_vector();
            REQUIRE(satisfied_by(build_system(f), beta));
        });
    }
}

TEST_CASE("system JSON", "[constraints]") {
    ConstraintSystem cs = build_system(TruthTable::parse("0001"));
    nlohmann::json j = cs.to_json();
    CHECK(j["n"] == 2);
    CHECK(j["cap"] == 2);
    CHECK(j["sets"] == nlohmann::json::array({{1}, {2}, {1, 2}}));
    ConstraintSystem back = ConstraintSystem::from_json(j);
    CHECK(back.n == cs.n);
    CHECK(back.sets == cs.sets);
}
