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

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "exact1q/scalar.hpp"
#include "exact1q/truth_table.hpp"

namespace exact1q {

/// Linear feasibility system over nonnegative rationals beta_1..beta_n:
/// one equality sum_{i in S} beta_i = 1 per distinguishing set S, plus the
/// global cap sum_i beta_i <= 2.
struct ConstraintSystem {
    int n = 0;
    /// Distinguishing sets as variable masks, sorted ascending, deduplicated.
    std::vector<VarSet> sets;

    static constexpr int kCap = 2;

    nlohmann::json to_json() const;
    static ConstraintSystem from_json(const nlohmann::json& j);

    /// The system as a flat list of <=-inequalities in the canonical order:
    /// per set S the pair (sum <= 1, -sum <= -1), then the cap, then
    /// -beta_i <= 0 for i = 1..n. Certificates index into this list.
    struct Inequality {
        std::vector<Rational> coeff;
        Rational rhs;
    };
    std::vector<Inequality> inequalities() const;
};

/// Deduplicated { S(x,y) : x,y in domain, f(x) != f(y) } where S collects
/// the differing bit positions. Empty for functions constant on their
/// domain.
std::vector<VarSet> distinguishing_sets(const TruthTable& f);

/// Builds the feasibility system for a function nonconstant on its domain.
/// Throws on constant functions (zero queries suffice there).
ConstraintSystem build_system(const TruthTable& f);

/// False certainly rules the function out (more than two dependent
/// variables); true leaves it undetermined. Total tables only.
bool dependency_shortcut(const TruthTable& f);

struct FeasibilityResult {
    bool feasible = false;
    /// Satisfies every constraint exactly when feasible.
    std::vector<Rational> witness;
    /// Nonnegative multipliers over ConstraintSystem::inequalities() whose
    /// combination reads 0 <= c with c < 0, when infeasible.
    std::vector<Rational> certificate;
};

/// Exact decision by Fourier-Motzkin elimination with provenance tracking;
/// the returned witness or certificate re-verifies against the system.
FeasibilityResult lp_feasible(const ConstraintSystem& cs);

/// Re-substitution checks used by tests and the CLI.
bool check_witness(const ConstraintSystem& cs, const std::vector<Rational>& beta);
bool check_certificate(const ConstraintSystem& cs, const std::vector<Rational>& cert);

/// Exact substitution of a beta vector over Q(sqrt(2)) (circuit-derived
/// amplitudes land there).
bool satisfied_by(const ConstraintSystem& cs, const std::vector<QSqrt2>& beta);

}  // namespace exact1q
