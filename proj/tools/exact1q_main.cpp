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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "exact1q/characterize.hpp"
#include "exact1q/circuit_io.hpp"
#include "exact1q/constraints.hpp"
#include "exact1q/decision_tree.hpp"
#include "exact1q/harness.hpp"

namespace {

using nlohmann::json;
using namespace exact1q;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

uint32_t parse_input_bits(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n) {
        throw std::invalid_argument("input must be a bit string of length " + std::to_string(n));
    }
    uint32_t idx = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("input bits must be 0 or 1");
        }
        idx = (idx << 1) | static_cast<uint32_t>(ch - '0');
    }
    return idx;
}

std::string input_bits(uint32_t x, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) {
        if ((x >> (n - 1 - i)) & 1u) {
            s[i] = '1';
        }
    }
    return s;
}

int cmd_classify(const std::string& table, bool as_json) {
    TruthTable f = TruthTable::parse(table);
    Classification cl = classify(f);
    json j = classification_to_json(cl);
    if (as_json) {
        emit(j);
    } else {
        std::cout << j["kind"].get<std::string>();
        if (j.contains("i")) std::cout << " i=" << j["i"].get<int>();
        if (j.contains("j")) std::cout << " j=" << j["j"].get<int>();
        if (j.contains("negated")) std::cout << " negated=" << j["negated"].get<int>();
        if (j.contains("reason")) std::cout << " reason=" << j["reason"].get<std::string>();
        std::cout << "\n";
    }
    return std::holds_alternative<NotExactOneQuery>(cl) ? kExitFalse : kExitTrue;
}

int cmd_dtree(const std::string& table, bool show_tree, bool as_json) {
    TruthTable f = TruthTable::parse(table);
    int depth = decision_tree_depth(f);
    if (as_json) {
        json j{{"depth", depth}};
        if (show_tree) {
            j["tree"] = tree_to_json(build_optimal_tree(f));
        }
        emit(j);
    } else {
        std::cout << "D(f) = " << depth << "\n";
        if (show_tree) {
            std::cout << tree_to_json(build_optimal_tree(f)).dump(2) << "\n";
        }
    }
    return kExitTrue;
}

int cmd_feasibility(const std::string& table, bool show_witness, bool as_json) {
    TruthTable f = TruthTable::parse(table);
    if (f.is_constant_on_domain()) {
        if (as_json) {
            emit(json{{"kind", "constant"},
                      {"note", "constant on its domain: zero queries suffice"}});
        } else {
            std::cout << "constant on its domain: zero queries suffice\n";
        }
        return kExitTrue;
    }
    ConstraintSystem cs = build_system(f);
    FeasibilityResult res = lp_feasible(cs);
    json j{{"system", cs.to_json()}, {"feasible", res.feasible}};
    if (!f.is_total()) {
        j["necessary_only"] = true;  // feasibility does not imply computability here
    }
    auto rationals = [](const std::vector<Rational>& v) {
        json arr = json::array();
        for (const Rational& r : v) {
            arr.push_back(rational_to_json(r));
        }
        return arr;
    };
    if (res.feasible && show_witness) {
        j["witness"] = rationals(res.witness);
    }
    if (!res.feasible) {
        j["certificate"] = rationals(res.certificate);
    }
    if (as_json) {
        emit(j);
    } else {
        std::cout << (res.feasible ? "feasible" : "infeasible");
        if (!f.is_total()) {
            std::cout << " (partial table: necessary condition only)";
        }
        std::cout << "\n";
        if (res.feasible && show_witness) {
            std::cout << "witness: " << j["witness"].dump() << "\n";
        }
        if (!res.feasible) {
            std::cout << "certificate: " << j["certificate"].dump() << "\n";
        }
    }
    return res.feasible ? kExitTrue : kExitFalse;
}

int cmd_synth(const std::string& table, const std::string& out_path, bool as_json) {
    TruthTable f = TruthTable::parse(table);
    Classification cl = classify(f);
    if (!in_exact_one_query_family(cl)) {
        json j{{"classification", classification_to_json(cl)},
               {"error", "no exact one-query circuit for this function"}};
        if (as_json) {
            emit(j);
        } else {
            std::cerr << j["error"].get<std::string>() << "\n";
        }
        return kExitFalse;
    }
    ExactCircuit circuit = synthesize(cl, f.n());
    json cj = circuit_to_json(circuit);
    if (!out_path.empty()) {
        save_circuit_file(out_path, AnyCircuit(circuit));
        if (as_json) {
            emit(json{{"classification", classification_to_json(cl)}, {"written", out_path}});
        } else {
            std::cout << "wrote " << out_path << "\n";
        }
    } else if (as_json) {
        emit(json{{"classification", classification_to_json(cl)}, {"circuit", cj}});
    } else {
        std::cout << cj.dump(2) << "\n";
    }
    return kExitTrue;
}

template <class S>
json simulate_report(const Circuit<S>& c, const TruthTable& f) {
    json per_input = json::array();
    uint32_t size = f.num_inputs();
    for (uint32_t x = 0; x < size; ++x) {
        if (!f.in_domain(x)) {
            continue;
        }
        auto state = run_circuit(c, x);
        auto p1 = outcome_probability(state, c.measurement(), 1);
        per_input.push_back(json{{"x", input_bits(x, f.n())},
                                 {"f", f.value(x)},
                                 {"p1", scalar_traits<S>::real_to_double(p1)}});
    }
    return json{{"per_input", std::move(per_input)},
                {"max_error", scalar_traits<S>::real_to_double(max_error(c, f))},
                {"is_exact", is_exact(c, f)}};
}

int cmd_simulate(const std::string& circuit_path, const std::string& table, bool as_json) {
    TruthTable f = TruthTable::parse(table);
    AnyCircuit c = load_circuit_file(circuit_path);
    json j = std::visit([&f](const auto& circuit) { return simulate_report(circuit, f); }, c);
    if (as_json) {
        emit(j);
    } else {
        for (const json& row : j["per_input"]) {
            std::cout << "x=" << row["x"].get<std::string>() << "  f=" << row["f"].get<int>()
                      << "  P[outcome=1]=" << row["p1"].get<double>() << "\n";
        }
        std::cout << "max_error = " << j["max_error"].get<double>() << "\n";
        std::cout << (j["is_exact"].get<bool>() ? "exact" : "not exact") << "\n";
    }
    return j["is_exact"].get<bool>() ? kExitTrue : kExitFalse;
}

int cmd_lemma1(const std::string& circuit_path, const std::string& xs, const std::string& ys,
               bool as_json) {
    AnyCircuit c = load_circuit_file(circuit_path);
    json j = std::visit(
        [&](const auto& circuit) {
            using S = std::decay_t<decltype(circuit.unitaries()[0](0, 0))>;
            uint32_t x = parse_input_bits(xs, circuit.n());
            uint32_t y = parse_input_bits(ys, circuit.n());
            auto sum = lemma1_sum(circuit, x, y);
            S phi = phi_inner_product(circuit, x, y);
            return json{{"x", xs},
                        {"y", ys},
                        {"lemma1_sum", scalar_traits<S>::real_to_double(sum)},
                        {"phi_inner_product",
                         json::array({scalar_traits<S>::real_to_double(scalar_traits<S>::real(phi)),
                                      scalar_traits<S>::real_to_double(
                                          scalar_traits<S>::imag(phi))})}};
        },
        c);
    if (as_json) {
        emit(j);
    } else {
        std::cout << "sum_{i in S} sum_k |alpha_i0k - alpha_i1k|^2 = "
                  << j["lemma1_sum"].get<double>() << "\n";
        std::cout << "<phi_x|phi_y> = " << j["phi_inner_product"][0].get<double>() << " + "
                  << j["phi_inner_product"][1].get<double>() << "i\n";
    }
    return kExitTrue;
}

int cmd_verify_theorem(int n, int jobs, int64_t sample, uint64_t seed, bool as_json) {
    VerificationReport report;
    if (sample >= 0) {
        report = sample_agreement(n, static_cast<uint64_t>(sample), seed, jobs);
    } else {
        if (n == 5) {
            throw std::invalid_argument("n=5 needs --sample (exhaustive sweep stops at n=4)");
        }
        report = verify_theorem(n, jobs);
    }
    if (as_json) {
        emit(report.to_json());
    } else {
        std::cout << "n=" << report.n << "  functions=" << report.total_functions
                  << "  constants=" << report.constants
                  << "  exact_one_query=" << report.exact_one_query
                  << " (dictators=" << report.dictator_count
                  << ", parity_pairs=" << report.parity_count << ")\n";
        std::cout << "mismatches: " << report.mismatches.size() << "  ("
                  << report.wall_time_seconds << " s)\n";
        for (const Mismatch& mm : report.mismatches) {
            std::cout << "  " << mm.to_json().dump() << "\n";
        }
    }
    return report.mismatches.empty() ? kExitTrue : kExitFalse;
}

int cmd_dj(int n, const std::string& out_path, bool as_json) {
    DeutschJozsaDemo demo = deutsch_jozsa(n);
    if (!out_path.empty()) {
        save_circuit_file(out_path, AnyCircuit(demo.circuit));
    }
    json j = simulate_report(demo.circuit, demo.table);
    j["table"] = demo.table.str();
    if (as_json) {
        emit(j);
    } else {
        std::cout << "promise table: " << demo.table.str() << "\n";
        for (const json& row : j["per_input"]) {
            std::cout << "x=" << row["x"].get<std::string>() << "  f=" << row["f"].get<int>()
                      << "  P[outcome=1]=" << row["p1"].get<double>() << "\n";
        }
        std::cout << (j["is_exact"].get<bool>() ? "exact on the promise domain" : "not exact")
                  << "\n";
    }
    return j["is_exact"].get<bool>() ? kExitTrue : kExitFalse;
}

int cmd_corpus(const std::string& name, bool as_json) {
    if (!name.empty()) {
        auto table = corpus_lookup(name);
        if (!table) {
            std::cerr << "unknown corpus entry: " << name << "\n";
            return kExitUsage;
        }
        if (as_json) {
            emit(json{{"name", name}, {"table", *table}});
        } else {
            std::cout << *table << "\n";
        }
        return kExitTrue;
    }
    if (as_json) {
        json j = json::array();
        for (const CorpusEntry& e : golden_corpus()) {
            j.push_back(json{{"name", e.name}, {"table", e.table}});
        }
        emit(j);
    } else {
        for (const CorpusEntry& e : golden_corpus()) {
            std::cout << e.name << "  " << e.table << "\n";
        }
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact one-query quantum algorithm toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output on every subcommand");

    std::string table;
    std::string circuit_path;
    std::string out_path;
    std::string x_bits;
    std::string y_bits;
    std::string corpus_name;
    bool show_tree = false;
    bool show_witness = false;
    int n = 0;
    int jobs = 1;
    int64_t sample = -1;
    uint64_t seed = 0;
    if (const char* env_seed = std::getenv("EXACT1Q_SEED")) {
        seed = std::strtoull(env_seed, nullptr, 10);
    }

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a truth table");
    classify_cmd->add_option("table", table, "truth table over {0,1}")->required();

    CLI::App* dtree_cmd = app.add_subcommand("dtree", "deterministic query complexity D(f)");
    dtree_cmd->add_option("table", table, "truth table over {0,1,*}")->required();
    dtree_cmd->add_flag("--tree", show_tree, "print an optimal decision tree");

    CLI::App* feas_cmd = app.add_subcommand("feasibility", "amplitude constraint feasibility");
    feas_cmd->add_option("table", table, "truth table over {0,1,*}")->required();
    feas_cmd->add_flag("--witness", show_witness, "print a satisfying assignment");

    CLI::App* synth_cmd = app.add_subcommand("synth", "synthesize a one-query circuit");
    synth_cmd->add_option("table", table, "truth table over {0,1}")->required();
    synth_cmd->add_option("-o,--output", out_path, "write circuit JSON here");

    CLI::App* sim_cmd = app.add_subcommand("simulate", "run a circuit against a table");
    sim_cmd->add_option("circuit", circuit_path, "circuit JSON file")->required();
    sim_cmd->add_option("table", table, "truth table over {0,1,*}")->required();

    CLI::App* lemma_cmd = app.add_subcommand("lemma1", "amplitude identity for an input pair");
    lemma_cmd->add_option("circuit", circuit_path, "circuit JSON file")->required();
    lemma_cmd->add_option("x", x_bits, "first input as bits, x_1 first")->required();
    lemma_cmd->add_option("y", y_bits, "second input as bits")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify-theorem", "exhaustive three-way agreement sweep");
    verify_cmd->add_option("-n", n, "variable count (1..4; 5 with --sample)")->required();
    verify_cmd->add_option("--jobs", jobs, "worker threads (never changes results)");
    verify_cmd->add_option("--sample", sample, "check this many random functions instead");
    verify_cmd->add_option("--seed", seed, "sampling seed (default 0 or EXACT1Q_SEED)");

    CLI::App* dj_cmd = app.add_subcommand("dj", "constant-vs-balanced promise demo");
    dj_cmd->add_option("-n", n, "oracle string length (even, 2 or 4)")->required();
    dj_cmd->add_option("-o,--output", out_path, "write circuit JSON here");

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "bundled named truth tables");
    corpus_cmd->add_option("name", corpus_name, "entry name (omit to list all)");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();  // lets --json appear after the subcommand
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(table, as_json);
        if (dtree_cmd->parsed()) return cmd_dtree(table, show_tree, as_json);
        if (feas_cmd->parsed()) return cmd_feasibility(table, show_witness, as_json);
        if (synth_cmd->parsed()) return cmd_synth(table, out_path, as_json);
        if (sim_cmd->parsed()) return cmd_simulate(circuit_path, table, as_json);
        if (lemma_cmd->parsed()) return cmd_lemma1(circuit_path, x_bits, y_bits, as_json);
        if (verify_cmd->parsed()) return cmd_verify_theorem(n, jobs, sample, seed, as_json);
        if (dj_cmd->parsed()) return cmd_dj(n, out_path, as_json);
        if (corpus_cmd->parsed()) return cmd_corpus(corpus_name, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
