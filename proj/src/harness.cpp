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

#include "exact1q/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "exact1q/characterize.hpp"
#include "exact1q/constraints.hpp"

namespace exact1q {

namespace {

struct Partial {
    uint64_t constants = 0;
    uint64_t dictators = 0;
    uint64_t parities = 0;
    std::vector<Mismatch> mismatches;
};

// Feasibility depends on the function only through its distinguishing-set
// family, so one exact solve covers every function sharing it. Verified
// witnesses/certificates keep each cached verdict self-checking.
class FeasibilityCache {
  public:
    explicit FeasibilityCache(int n) : n_(n) {}

    bool feasible(const std::vector<VarSet>& sets) {
        auto it = cache_.find(sets);
        if (it != cache_.end()) {
            return it->second;
        }
        ConstraintSystem cs;
        cs.n = n_;
        cs.sets = sets;
        FeasibilityResult res = lp_feasible(cs);
        bool ok = res.feasible ? check_witness(cs, res.witness)
                               : check_certificate(cs, res.certificate);
        if (!ok) {
            throw std::logic_error("feasibility artifact failed re-verification");
        }
        return cache_.emplace(sets, res.feasible).first->second;
    }

  private:
    int n_;
    std::map<std::vector<VarSet>, bool> cache_;
};

void check_function(const TruthTable& f, FeasibilityCache& cache, Partial& out) {
    Classification cl = classify(f);
    if (std::holds_alternative<Constant>(cl)) {
        ++out.constants;
        return;
    }
    bool family = in_exact_one_query_family(cl);
    bool feasible = cache.feasible(distinguishing_sets(f));
    std::optional<bool> synth_ok;
    if (family) {
        synth_ok = is_exact(synthesize(cl, f.n()), f);
    }
    bool agree = (family == feasible) && (!family || *synth_ok);
    if (!agree) {
        Mismatch mm;
        mm.table = f.str();
        mm.classifier = classification_to_json(cl)["kind"].get<std::string>();
        mm.lp_feasible = feasible;
        mm.synthesis_exact = synth_ok;
        out.mismatches.push_back(std::move(mm));
        return;
    }
    if (std::holds_alternative<Dictator>(cl)) {
        ++out.dictators;
    } else if (std::holds_alternative<ParityPair>(cl)) {
        ++out.parities;
    }
}

VerificationReport merge(int n, uint64_t total, std::vector<Partial> parts, double seconds) {
    VerificationReport report;
    report.n = n;
    report.total_functions = total;
    report.wall_time_seconds = seconds;
    for (Partial& p : parts) {
        report.constants += p.constants;
        report.dictator_count += p.dictators;
        report.parity_count += p.parities;
        for (Mismatch& mm : p.mismatches) {
            report.mismatches.push_back(std::move(mm));
        }
    }
    report.exact_one_query = report.dictator_count + report.parity_count;
    return report;
}

template <class Work>
std::vector<Partial> run_jobs(uint64_t count, int jobs, const Work& work) {
    jobs = std::max(1, jobs);
    jobs = static_cast<int>(std::min<uint64_t>(jobs, std::max<uint64_t>(count, 1)));
    std::vector<Partial> parts(jobs);
    if (jobs == 1) {
        work(0, count, parts[0]);
        return parts;
    }
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    uint64_t chunk = (count + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
        uint64_t lo = chunk * t;
        uint64_t hi = std::min(count, lo + chunk);
        threads.emplace_back([&work, &parts, t, lo, hi] { work(lo, hi, parts[t]); });
    }
    for (std::thread& th : threads) {
        th.join();
    }
    return parts;
}

}  // namespace

VerificationReport verify_theorem(int n, int jobs) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("verify_theorem sweeps 1 <= n <= 4 exhaustively");
    }
    auto start = std::chrono::steady_clock::now();
    uint64_t total = uint64_t{1} << (uint64_t{1} << n);
    auto work = [n](uint64_t lo, uint64_t hi, Partial& out) {
        FeasibilityCache cache(n);
        for (uint64_t v = lo; v < hi; ++v) {
            check_function(TruthTable::from_packed(n, v), cache, out);
        }
    };
    std::vector<Partial> parts = run_jobs(total, jobs, work);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return merge(n, total, std::move(parts), seconds);
}

VerificationReport sample_agreement(int n, uint64_t samples, uint64_t seed, int jobs) {
    if (n < 1 || n > 5) {
        throw std::invalid_argument("sample_agreement supports 1 <= n <= 5");
    }
    auto start = std::chrono::steady_clock::now();
    // Pre-draw the sample so the report is independent of the job split.
    std::mt19937_64 rng(seed);
    uint64_t bits = uint64_t{1} << n;
    uint64_t mask = bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
    std::vector<uint64_t> values(samples);
    for (uint64_t& v : values) {
        v = rng() & mask;
    }
    auto work = [n, &values](uint64_t lo, uint64_t hi, Partial& out) {
        FeasibilityCache cache(n);
        for (uint64_t s = lo; s < hi; ++s) {
            check_function(TruthTable::from_packed(n, values[s]), cache, out);
        }
    };
    std::vector<Partial> parts = run_jobs(samples, jobs, work);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return merge(n, samples, std::move(parts), seconds);
}

nlohmann::json Mismatch::to_json() const {
    nlohmann::json j{{"table", table}, {"classifier", classifier}, {"lp_feasible", lp_feasible}};
    if (synthesis_exact) {
        j["synthesis_exact"] = *synthesis_exact;
    }
    return j;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json mm = nlohmann::json::array();
    for (const Mismatch& m : mismatches) {
        mm.push_back(m.to_json());
    }
    return nlohmann::json{{"n", n},
                          {"total_functions", total_functions},
                          {"constants", constants},
                          {"exact_one_query", exact_one_query},
                          {"dictator_count", dictator_count},
                          {"parity_count", parity_count},
                          {"mismatches", std::move(mm)}};
}

const std::vector<CorpusEntry>& golden_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"const0", "0000"},
        {"and2", "0001"},
        {"x1_and_not_x2", "0010"},
        {"x1", "0011"},
        {"not_x1_and_x2", "0100"},
        {"x2", "0101"},
        {"xor2", "0110"},
        {"or2", "0111"},
        {"nor2", "1000"},
        {"xnor2", "1001"},
        {"not_x2", "1010"},
        {"x1_or_not_x2", "1011"},
        {"not_x1", "1100"},
        {"not_x1_or_x2", "1101"},
        {"nand2", "1110"},
        {"const1", "1111"},
        {"deutsch", "0110"},
        {"fig2", "00000111"},
        {"majority3", "00010111"},
        {"parity3", "01101001"},
        {"dj2", "0110"},
        {"dj4", "0**1*11**11*1**0"},
    };
    return corpus;
}

std::optional<std::string> corpus_lookup(const std::string& name) {
    for (const CorpusEntry& e : golden_corpus()) {
        if (e.name == name) {
            return e.table;
        }
    }
    return std::nullopt;
}

}  // namespace exact1q
