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
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Needs the CLI binary path as argv[1] for the determinism checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "exact1q/characterize.hpp"
#include "exact1q/constraints.hpp"
#include "exact1q/decision_tree.hpp"
#include "exact1q/harness.hpp"

using namespace exact1q;

namespace {

struct Suite {
    int failures = 0;
    std::string detail;

    void run(const std::string& name, const std::function<void()>& body) {
        detail.clear();
        try {
            body();
            std::cout << "[PASS] " << name << detail << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
        }
    }
};

void require(bool cond, const std::string& what) {
    if (!cond) {
        throw std::runtime_error(what);
    }
}

std::string run_command(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "failed to spawn: " + cmd);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, got);
    }
    int rc = pclose(pipe);
    require(rc != -1, "pclose failed");
    return out;
}

// Brute-force tree enumeration, the independent D(f) oracle (depth-limited;
// no variable repeats along a path).
bool some_tree_computes(int depth, VarSet avail, const TruthTable& f,
                        std::vector<std::pair<int, int>>& path) {
    for (int bit = 0; bit < 2; ++bit) {
        bool ok = true;
        for (uint32_t x = 0; x < f.num_inputs() && ok; ++x) {
            if (!f.in_domain(x)) {
                continue;
            }
            bool reached = true;
            for (auto [var, val] : path) {
                if (f.input_bit(x, var) != val) {
                    reached = false;
                    break;
                }
            }
            if (reached && f.value(x) != bit) {
                ok = false;
            }
        }
        if (ok) {
            return true;
        }
    }
    if (depth == 0) {
        return false;
    }
    for (int var = 1; var <= f.n(); ++var) {
        if (!((avail >> (var - 1)) & 1u)) {
            continue;
        }
        VarSet rest = avail & ~(VarSet{1} << (var - 1));
        path.emplace_back(var, 0);
        bool lo = some_tree_computes(depth - 1, rest, f, path);
        path.back().second = 1;
        bool hi = lo && some_tree_computes(depth - 1, rest, f, path);
        path.pop_back();
        if (lo && hi) {
            return true;
        }
    }
    return false;
}

int tree_search_depth(const TruthTable& f) {
    VarSet all = (VarSet{1} << f.n()) - 1;
    for (int d = 0; d <= f.n(); ++d) {
        std::vector<std::pair<int, int>> path;
        if (some_tree_computes(d, all, f, path)) {
            return d;
        }
    }
    return f.n() + 1;
}

using Cf = std::complex<double>;

Matrix<Cf> random_unitary(int d, std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    Matrix<Cf> m(d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            m(r, c) = {gauss(rng), gauss(rng)};
        }
    }
    for (int c = 0; c < d; ++c) {
        for (int p = 0; p < c; ++p) {
            Cf proj{};
            for (int r = 0; r < d; ++r) {
                proj += std::conj(m(r, p)) * m(r, c);
            }
            for (int r = 0; r < d; ++r) {
                m(r, c) -= proj * m(r, p);
            }
        }
        double norm = 0;
        for (int r = 0; r < d; ++r) {
            norm += std::norm(m(r, c));
        }
        norm = std::sqrt(norm);
        for (int r = 0; r < d; ++r) {
            m(r, c) /= norm;
        }
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    Suite suite;

    std::map<int, VerificationReport> reports;

    suite.run("criterion 1: three-way agreement, zero mismatches for n = 1..4", [&] {
        auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 4; ++n) {
            reports[n] = verify_theorem(n);
            require(reports[n].mismatches.empty(),
                    "mismatches at n = " + std::to_string(n));
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require(elapsed < 60.0, "sweep exceeded 60 s");
        std::ostringstream note;
        note << " (full n=1..4 sweep in " << elapsed << " s)";
        suite.detail = note.str();
    });

    suite.run("criterion 2: exact one-query counts are 2, 6, 12, 20", [&] {
        const uint64_t expected[5] = {0, 2, 6, 12, 20};
        for (int n = 1; n <= 4; ++n) {
            require(reports.count(n) == 1, "missing report");
            uint64_t closed_form = 2 * uint64_t(n) + uint64_t(n) * (n - 1);
            require(closed_form == expected[n], "closed form mismatch");
            require(reports[n].exact_one_query == expected[n],
                    "enumerated count mismatch at n = " + std::to_string(n));
        }
    });

    suite.run("criterion 3: exact 1-query parity vs depth-2 decision trees", [&] {
        TruthTable parity = TruthTable::parse("0110");
        ExactCircuit c = synthesize(classify(parity), 2);
        require(c.queries() == 1, "not a one-query circuit");
        for (uint32_t x = 0; x < 4; ++x) {
            auto state = run_circuit(c, x);
            QSqrt2 p = outcome_probability(state, c.measurement(), parity.value(x));
            require(p == QSqrt2(1), "outcome probability not exactly 1");
        }
        require(decision_tree_depth(parity) == 2, "D(parity) != 2");
    });

    suite.run("criterion 4: amplitude identity exact; float expansion within 1e-9", [&] {
        for (int n = 1; n <= 4; ++n) {
            enumerate_all(n, [&](const TruthTable& f) {
                Classification cl = classify(f);
                if (!in_exact_one_query_family(cl)) {
                    return;
                }
                ExactCircuit c = synthesize(cl, n);
                for (uint32_t x = 0; x < f.num_inputs(); ++x) {
                    for (uint32_t y = x + 1; y < f.num_inputs(); ++y) {
                        if (f.value(x) != f.value(y)) {
                            require(lemma1_sum(c, x, y) == QSqrt2(1),
                                    "lemma1_sum != 1 for " + f.str());
                        }
                    }
                }
            });
        }

        std::mt19937 rng(0);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + static_cast<int>(rng() % 3);
            int K = 1 + static_cast<int>(rng() % 2);
            int d = 2 * n * K;
            std::vector<Matrix<Cf>> us{random_unitary(d, rng), random_unitary(d, rng)};
            Measurement<Cf> m;
            m.e1 = Matrix<Cf>::identity(d);
            FloatCircuit c(n, K, std::move(us), std::move(m));
            uint32_t x = rng() % (1u << n);
            uint32_t y = rng() % (1u << n);

            AmplitudeTable<Cf> at = amplitude_table(c);
            VarSet s = varset_from_index_diff(n, x ^ y);
            Cf closed{};
            for (int i = 1; i <= n; ++i) {
                for (int k = 0; k < K; ++k) {
                    Cf a0 = at.alpha(i, 0, k), a1 = at.alpha(i, 1, k);
                    if ((s >> (i - 1)) & 1u) {
                        closed += std::conj(a0) * a1 + std::conj(a1) * a0;
                    } else {
                        closed += std::conj(a0) * a0 + std::conj(a1) * a1;
                    }
                }
            }
            require(std::abs(phi_inner_product(c, x, y) - closed) <= 1e-9,
                    "expansion mismatch beyond 1e-9");
        }
    });

    suite.run("criterion 5: two-variable conjunction is infeasible with certificate", [&] {
        TruthTable and2 = TruthTable::parse("0001");
        ConstraintSystem cs = build_system(and2);
        FeasibilityResult r = lp_feasible(cs);
        require(!r.feasible, "AND_2 system reported feasible");
        require(check_certificate(cs, r.certificate), "certificate failed re-verification");
        Classification cl = classify(and2);
        require(std::holds_alternative<NotExactOneQuery>(cl), "classifier disagrees");
        require(std::get<NotExactOneQuery>(cl).reason ==
                    NotExactOneQuery::Reason::AndTypeOnTwo,
                "wrong rejection reason");
    });

    suite.run("criterion 6: feasibility implies at most two dependent variables", [&] {
        for (int n = 1; n <= 4; ++n) {
            std::map<std::vector<VarSet>, bool> cache;
            enumerate_all(n, [&](const TruthTable& f) {
                if (f.is_constant_on_domain()) {
                    return;
                }
                size_t deps = dependent_set(f).size();
                ConstraintSystem cs = build_system(f);
                auto it = cache.find(cs.sets);
                bool feasible = it != cache.end()
                                    ? it->second
                                    : cache.emplace(cs.sets, lp_feasible(cs).feasible)
                                          .first->second;
                if (feasible) {
                    require(deps <= 2, "feasible function with 3+ dependent variables");
                }
                if (deps >= 3) {
                    require(!feasible, "3+ dependent variables but feasible");
                }
            });
        }
    });

    suite.run("criterion 7: decision tree depths match exhaustive tree search", [&] {
        TruthTable dictator = TruthTable::parse("0011");
        require(decision_tree_depth(dictator) == 1, "D(dictator) != 1");
        require(tree_search_depth(dictator) == 1, "tree search disagrees on dictator");

        TruthTable parity = TruthTable::parse("0110");
        require(decision_tree_depth(parity) == 2, "D(parity) != 2");
        require(tree_search_depth(parity) == 2, "tree search disagrees on parity");

        TruthTable fig2 = TruthTable::parse("00000111");
        require(decision_tree_depth(fig2) == 3, "D != 3");
        require(tree_search_depth(fig2) == 3, "tree search disagrees");

        // The worked tree: x_1 first, then x_2, then x_3.
        DecisionTree tree = DecisionTree::make_node(
            1, DecisionTree::make_leaf(0),
            DecisionTree::make_node(2,
                                    DecisionTree::make_node(3, DecisionTree::make_leaf(0),
                                                            DecisionTree::make_leaf(1)),
                                    DecisionTree::make_leaf(1)));
        require(tree_depth(tree) == 3, "worked tree depth != 3");
        for (uint32_t x = 0; x < 8; ++x) {
            require(evaluate_tree(tree, 3, x) == fig2.value(x),
                    "worked tree wrong at input " + std::to_string(x));
        }
    });

    suite.run("criterion 8: promise demo exact for n = 2 and n = 4", [&] {
        for (int n : {2, 4}) {
            DeutschJozsaDemo demo = deutsch_jozsa(n);
            require(demo.circuit.queries() == 1, "not one query");
            for (uint32_t x = 0; x < demo.table.num_inputs(); ++x) {
                if (!demo.table.in_domain(x)) {
                    continue;
                }
                auto state = run_circuit(demo.circuit, x);
                QSqrt2 p =
                    outcome_probability(state, demo.circuit.measurement(), demo.table.value(x));
                require(p == QSqrt2(1), "promise input not exact");
            }
        }
    });

    suite.run("criterion 9: byte-identical reports across runs and job counts", [&] {
        require(!cli.empty(), "CLI path missing (pass it as argv[1])");
        std::string base = run_command(cli + " verify-theorem -n 3 --json");
        require(!base.empty(), "no output from CLI");
        require(base == run_command(cli + " verify-theorem -n 3 --json"),
                "two identical runs differ");
        require(base == run_command(cli + " verify-theorem -n 3 --jobs 4 --json"),
                "--jobs changed the output");
        require(base == run_command(cli + " verify-theorem -n 3 --jobs 7 --json"),
                "--jobs 7 changed the output");
    });

    if (suite.failures) {
        std::cout << suite.failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
