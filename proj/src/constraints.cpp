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

#include "exact1q/constraints.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace exact1q {

namespace {

// One working row of the elimination: coeff . beta <= rhs, together with the
// nonnegative multipliers over the original inequality list that derive it.
struct Row {
    std::vector<Rational> coeff;
    Rational rhs;
    std::vector<Rational> provenance;
};

bool row_is_zero(const Row& r) {
    return std::all_of(r.coeff.begin(), r.coeff.end(), [](const Rational& c) { return c == 0; });
}

// Scales so the largest |coefficient| (or |rhs| for zero rows) is 1; keeps
// dedup keys canonical. Positive scaling preserves provenance validity.
void normalize(Row& r) {
    Rational max_abs = 0;
    for (const Rational& c : r.coeff) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (a > max_abs) max_abs = a;
    }
    if (max_abs == 0) {
        max_abs = r.rhs < 0 ? Rational(-r.rhs) : r.rhs;
    }
    if (max_abs == 0 || max_abs == 1) {
        return;
    }
    for (Rational& c : r.coeff) c /= max_abs;
    r.rhs /= max_abs;
    for (Rational& p : r.provenance) p /= max_abs;
}

}  // namespace

std::vector<VarSet> distinguishing_sets(const TruthTable& f) {
    uint32_t size = f.num_inputs();
    std::vector<uint32_t> zeros;
    std::vector<uint32_t> ones;
    for (uint32_t idx = 0; idx < size; ++idx) {
        if (!f.in_domain(idx)) {
            continue;
        }
        (f.value(idx) ? ones : zeros).push_back(idx);
    }
    std::set<VarSet> found;
    for (uint32_t a : zeros) {
        for (uint32_t b : ones) {
            found.insert(varset_from_index_diff(f.n(), a ^ b));
        }
    }
    return {found.begin(), found.end()};
}

ConstraintSystem build_system(const TruthTable& f) {
    std::vector<VarSet> sets = distinguishing_sets(f);
    if (sets.empty()) {
        throw std::invalid_argument(
            "function is constant on its domain: zero queries suffice, no system to build");
    }
    ConstraintSystem cs;
    cs.n = f.n();
    cs.sets = std::move(sets);
    return cs;
}

bool dependency_shortcut(const TruthTable& f) {
    return dependent_set(f).size() <= 2;
}

nlohmann::json ConstraintSystem::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    nlohmann::json sets_json = nlohmann::json::array();
    for (VarSet s : sets) {
        nlohmann::json vars = nlohmann::json::array();
        for (int i = 1; i <= n; ++i) {
            if ((s >> (i - 1)) & 1u) {
                vars.push_back(i);
            }
        }
        sets_json.push_back(std::move(vars));
    }
    j["sets"] = std::move(sets_json);
    j["cap"] = kCap;
    return j;
}

ConstraintSystem ConstraintSystem::from_json(const nlohmann::json& j) {
    ConstraintSystem cs;
    cs.n = j.at("n").get<int>();
    for (const nlohmann::json& vars : j.at("sets")) {
        VarSet s = 0;
        for (const nlohmann::json& v : vars) {
            int i = v.get<int>();
            if (i < 1 || i > cs.n) {
                throw std::invalid_argument("set variable out of range");
            }
            s |= VarSet{1} << (i - 1);
        }
        cs.sets.push_back(s);
    }
    std::sort(cs.sets.begin(), cs.sets.end());
    cs.sets.erase(std::unique(cs.sets.begin(), cs.sets.end()), cs.sets.end());
    return cs;
}

std::vector<ConstraintSystem::Inequality> ConstraintSystem::inequalities() const {
    std::vector<Inequality> rows;
    rows.reserve(2 * sets.size() + 1 + n);
    for (VarSet s : sets) {
        Inequality up{std::vector<Rational>(n, 0), 1};
        Inequality down{std::vector<Rational>(n, 0), -1};
        for (int i = 0; i < n; ++i) {
            if ((s >> i) & 1u) {
                up.coeff[i] = 1;
                down.coeff[i] = -1;
            }
        }
        rows.push_back(std::move(up));
        rows.push_back(std::move(down));
    }
    Inequality cap{std::vector<Rational>(n, 1), kCap};
    rows.push_back(std::move(cap));
    for (int i = 0; i < n; ++i) {
        Inequality nonneg{std::vector<Rational>(n, 0), 0};
        nonneg.coeff[i] = -1;
        rows.push_back(std::move(nonneg));
    }
    return rows;
}

FeasibilityResult lp_feasible(const ConstraintSystem& cs) {
    const std::vector<ConstraintSystem::Inequality> original = cs.inequalities();
    const size_t m = original.size();
    const int n = cs.n;

    auto make_row = [&](size_t r) {
        Row row{original[r].coeff, original[r].rhs, std::vector<Rational>(m, 0)};
        row.provenance[r] = 1;
        return row;
    };

    // Equality pairs (rows 2k, 2k+1 of the canonical list) stay exact
    // negations of each other through every substitution below.
    struct EqPair {
        Row up;
        Row down;
    };
    std::vector<EqPair> eqs;
    eqs.reserve(cs.sets.size());
    for (size_t k = 0; k < cs.sets.size(); ++k) {
        eqs.push_back(EqPair{make_row(2 * k), make_row(2 * k + 1)});
    }
    std::vector<Row> ineqs;
    for (size_t r = 2 * cs.sets.size(); r < m; ++r) {
        ineqs.push_back(make_row(r));
    }

    FeasibilityResult res;
    auto infeasible_via = [&](const Row& row) {
        res.feasible = false;
        res.certificate = row.provenance;
        return res;
    };

    // Cancels `row`'s coefficient on var using the pair; the multiplier is
    // put on whichever direction keeps it nonnegative, so provenance stays a
    // valid Farkas combination.
    auto substitute = [&](Row& row, int var, const EqPair& eq) {
        const Rational& c = row.coeff[var];
        if (c == 0) {
            return;
        }
        Rational s = -c / eq.up.coeff[var];
        const Row& use = s >= 0 ? eq.up : eq.down;
        const Rational t = s >= 0 ? s : Rational(-s);
        for (int i = 0; i < n; ++i) {
            row.coeff[i] += t * use.coeff[i];
        }
        row.rhs += t * use.rhs;
        for (size_t r = 0; r < m; ++r) {
            row.provenance[r] += t * use.provenance[r];
        }
    };

    // Phase 1: each equality pins one variable; Gaussian substitution
    // removes it from the rest of the system. This sidesteps the
    // Fourier-Motzkin blowup on the (many) equality rows.
    struct PivotStep {
        int var;
        Row eq;  // coefficient on var is nonzero; later vars only otherwise
    };
    std::vector<PivotStep> pivots;
    std::vector<bool> pivoted(n, false);
    for (size_t k = 0; k < eqs.size(); ++k) {
        int var = -1;
        for (int i = 0; i < n; ++i) {
            if (eqs[k].up.coeff[i] != 0) {
                var = i;
                break;
            }
        }
        if (var < 0) {
            // Degenerate pair 0 <= rhs, 0 <= -rhs.
            if (eqs[k].up.rhs < 0) {
                return infeasible_via(eqs[k].up);
            }
            if (eqs[k].down.rhs < 0) {
                return infeasible_via(eqs[k].down);
            }
            continue;
        }
        for (size_t j = k + 1; j < eqs.size(); ++j) {
            substitute(eqs[j].up, var, eqs[k]);
            substitute(eqs[j].down, var, eqs[k]);
        }
        for (Row& row : ineqs) {
            substitute(row, var, eqs[k]);
        }
        pivoted[var] = true;
        pivots.push_back(PivotStep{var, eqs[k].up});
    }

    // Phase 2: Fourier-Motzkin over the remaining free variables, keeping a
    // snapshot per eliminated variable for witness back-substitution.
    std::vector<Row> rows = std::move(ineqs);
    std::vector<std::pair<int, std::vector<Row>>> stages;
    for (int var = 0; var < n; ++var) {
        if (pivoted[var]) {
            continue;
        }
        stages.emplace_back(var, rows);
        std::vector<Row> next;
        std::vector<const Row*> pos;
        std::vector<const Row*> neg;
        std::map<std::pair<std::vector<Rational>, Rational>, bool> seen;

        auto push = [&](Row&& row) {
            if (row_is_zero(row) && row.rhs >= 0) {
                return;  // tautology
            }
            normalize(row);
            auto key = std::make_pair(row.coeff, row.rhs);
            if (seen.emplace(std::move(key), true).second) {
                next.push_back(std::move(row));
            }
        };

        for (const Row& row : stages.back().second) {
            int sign = row.coeff[var].sign();
            if (sign > 0) {
                pos.push_back(&row);
            } else if (sign < 0) {
                neg.push_back(&row);
            } else {
                Row copy = row;
                push(std::move(copy));
            }
        }
        for (const Row* p : pos) {
            for (const Row* q : neg) {
                // Cancel var: (-q_v) * p + (p_v) * q, both multipliers > 0.
                Rational mp = -q->coeff[var];
                Rational mq = p->coeff[var];
                Row combined{std::vector<Rational>(n, 0), 0, std::vector<Rational>(m, 0)};
                for (int i = 0; i < n; ++i) {
                    combined.coeff[i] = mp * p->coeff[i] + mq * q->coeff[i];
                }
                combined.rhs = mp * p->rhs + mq * q->rhs;
                for (size_t r = 0; r < m; ++r) {
                    combined.provenance[r] = mp * p->provenance[r] + mq * q->provenance[r];
                }
                push(std::move(combined));
            }
        }
        rows = std::move(next);
    }

    // Every variable is gone: surviving rows read 0 <= rhs.
    for (const Row& row : rows) {
        if (row.rhs < 0) {
            return infeasible_via(row);
        }
    }

    // Witness: free variables from their snapshots (take the lower bound,
    // which exists through the surviving -beta_i <= 0 row), then pivoted
    // variables from their equalities in reverse order.
    res.feasible = true;
    res.witness.assign(n, 0);
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        int var = it->first;
        std::optional<Rational> lower;
        std::optional<Rational> upper;
        for (const Row& row : it->second) {
            int sign = row.coeff[var].sign();
            if (sign == 0) {
                continue;
            }
            Rational rest = row.rhs;
            for (int i = 0; i < n; ++i) {
                if (i != var && row.coeff[i] != 0) {
                    rest -= row.coeff[i] * res.witness[i];
                }
            }
            Rational bound = rest / row.coeff[var];
            if (sign > 0) {
                if (!upper || bound < *upper) upper = bound;
            } else {
                if (!lower || bound > *lower) lower = bound;
            }
        }
        if (!lower) {
            throw std::logic_error("missing lower bound during back-substitution");
        }
        if (upper && *lower > *upper) {
            throw std::logic_error("inconsistent bounds during back-substitution");
        }
        res.witness[var] = *lower;
    }
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Rational rest = it->eq.rhs;
        for (int i = 0; i < n; ++i) {
            if (i != it->var && it->eq.coeff[i] != 0) {
                rest -= it->eq.coeff[i] * res.witness[i];
            }
        }
        res.witness[it->var] = rest / it->eq.coeff[it->var];
    }
    return res;
}

bool check_witness(const ConstraintSystem& cs, const std::vector<Rational>& beta) {
    if (static_cast<int>(beta.size()) != cs.n) {
        return false;
    }
    for (const auto& ineq : cs.inequalities()) {
        Rational lhs = 0;
        for (int i = 0; i < cs.n; ++i) {
            lhs += ineq.coeff[i] * beta[i];
        }
        if (lhs > ineq.rhs) {
            return false;
        }
    }
    return true;
}

bool check_certificate(const ConstraintSystem& cs, const std::vector<Rational>& cert) {
    const auto original = cs.inequalities();
    if (cert.size() != original.size()) {
        return false;
    }
    std::vector<Rational> combined(cs.n, 0);
    Rational rhs = 0;
    for (size_t r = 0; r < original.size(); ++r) {
        if (cert[r] < 0) {
            return false;
        }
        for (int i = 0; i < cs.n; ++i) {
            combined[i] += cert[r] * original[r].coeff[i];
        }
        rhs += cert[r] * original[r].rhs;
    }
    bool zero = std::all_of(combined.begin(), combined.end(),
                            [](const Rational& c) { return c == 0; });
    return zero && rhs < 0;
}

bool satisfied_by(const ConstraintSystem& cs, const std::vector<QSqrt2>& beta) {
    if (static_cast<int>(beta.size()) != cs.n) {
        return false;
    }
    for (const auto& ineq : cs.inequalities()) {
        QSqrt2 lhs;
        for (int i = 0; i < cs.n; ++i) {
            lhs += QSqrt2(ineq.coeff[i]) * beta[i];
        }
        if ((lhs - QSqrt2(ineq.rhs)).sign() > 0) {
            return false;
        }
    }
    return true;
}

}  // namespace exact1q
