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

#include "exact1q/characterize.hpp"

#include <bit>
#include <stdexcept>

namespace exact1q {

namespace {

const QSqrt2 kHalf{Rational(1, 2)};

Measurement<ExactComplex> basis_projector(int dim, int index) {
    Measurement<ExactComplex> m;
    m.kind = MeasurementKind::Projective;
    m.e1 = Matrix<ExactComplex>(dim);
    m.e1(index, index) = ExactComplex(1);
    return m;
}

ExactCircuit synthesize_dictator(const Dictator& d, int n) {
    int dim = 2 * n;
    int target = state_index(d.i, 0, 0, 1);

    Matrix<ExactComplex> u0 = Matrix<ExactComplex>::identity(dim);
    if (target != 0) {
        u0(0, 0) = ExactComplex();
        u0(target, target) = ExactComplex();
        u0(target, 0) = ExactComplex(1);
        u0(0, target) = ExactComplex(1);
    }

    // Outcome 1 on every |i', b=1, k> state; the post-query state is
    // |i, x_i, 0>, so the measured bit is exactly x_i.
    Measurement<ExactComplex> m;
    m.kind = MeasurementKind::Projective;
    m.e1 = Matrix<ExactComplex>(dim);
    for (int i = 1; i <= n; ++i) {
        int idx = state_index(i, d.negated ? 0 : 1, 0, 1);
        m.e1(idx, idx) = ExactComplex(1);
    }

    std::vector<Matrix<ExactComplex>> us;
    us.push_back(std::move(u0));
    us.push_back(Matrix<ExactComplex>::identity(dim));
    return ExactCircuit(n, 1, std::move(us), std::move(m));
}

ExactCircuit synthesize_parity(const ParityPair& p, int n) {
    int dim = 2 * n;
    // Support rows: the (b=0, b=1) pair of blocks i and j.
    int s[4] = {state_index(p.i, 0, 0, 1), state_index(p.i, 1, 0, 1),
                state_index(p.j, 0, 0, 1), state_index(p.j, 1, 0, 1)};

    // U_0 embeds a 4x4 half-Hadamard block: column 0 is the Deutsch
    // preparation (|i,0> - |i,1> + |j,0> - |j,1>)/2, columns 1..3 complete
    // it with the remaining sign patterns; all other columns permute the
    // non-support rows in order.
    static const int kSigns[4][4] = {
        // columns: v_+, all-plus, (+,+,-,-), (+,-,-,+)
        {+1, +1, +1, +1},
        {-1, +1, +1, -1},
        {+1, +1, -1, -1},
        {-1, +1, -1, +1},
    };
    Matrix<ExactComplex> u0(dim);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            u0(s[r], c) = ExactComplex(kSigns[r][c] > 0 ? kHalf : -kHalf);
        }
    }
    int col = 4;
    for (int r = 0; r < dim; ++r) {
        if (r != s[0] && r != s[1] && r != s[2] && r != s[3]) {
            u0(r, col++) = ExactComplex(1);
        }
    }

    // U_1 sends the two orthogonal post-query states to basis states of
    // block i: v_+ -> |i,0>, v_- -> |i,1>. The two remaining rows absorb
    // the even-phase combinations (|i,0>+|i,1>)/sqrt(2), (|j,0>+|j,1>)/sqrt(2).
    const QSqrt2 inv_sqrt2{Rational(0), Rational(1, 2)};  // sqrt(2)/2
    Matrix<ExactComplex> u1(dim);
    const QSqrt2 h = kHalf;
    // row s[0] = v_+^dagger, row s[1] = v_-^dagger.
    QSqrt2 vplus[4] = {h, -h, h, -h};
    QSqrt2 vminus[4] = {h, -h, -h, h};
    for (int c = 0; c < 4; ++c) {
        u1(s[0], s[c]) = ExactComplex(vplus[c]);
        u1(s[1], s[c]) = ExactComplex(vminus[c]);
    }
    u1(s[2], s[0]) = ExactComplex(inv_sqrt2);
    u1(s[2], s[1]) = ExactComplex(inv_sqrt2);
    u1(s[3], s[2]) = ExactComplex(inv_sqrt2);
    u1(s[3], s[3]) = ExactComplex(inv_sqrt2);
    for (int r = 0; r < dim; ++r) {
        if (r != s[0] && r != s[1] && r != s[2] && r != s[3]) {
            u1(r, r) = ExactComplex(1);
        }
    }

    int outcome_one_state = p.negated ? s[0] : s[1];
    std::vector<Matrix<ExactComplex>> us;
    us.push_back(std::move(u0));
    us.push_back(std::move(u1));
    return ExactCircuit(n, 1, std::move(us), basis_projector(dim, outcome_one_state));
}

}  // namespace

Classification classify(const TruthTable& f) {
    if (!f.is_total()) {
        throw std::invalid_argument("classify: partial tables are not supported");
    }
    std::vector<int> deps = dependent_set(f);
    if (deps.empty()) {
        return Constant{f.value(0)};
    }
    if (deps.size() == 1) {
        // f = x_i ^ c with c = f at any input where x_i = 0, e.g. index 0.
        return Dictator{deps[0], f.value(0)};
    }
    if (deps.size() > 2) {
        return NotExactOneQuery{NotExactOneQuery::Reason::DependsOnTooMany,
                                static_cast<int>(deps.size())};
    }
    int i = deps[0];
    int j = deps[1];
    uint32_t bi = uint32_t{1} << (f.n() - i);
    uint32_t bj = uint32_t{1} << (f.n() - j);
    int r00 = f.value(0);
    int r01 = f.value(bj);
    int r10 = f.value(bi);
    int r11 = f.value(bi | bj);
    if (r00 == r11 && r01 == r10 && r00 != r01) {
        return ParityPair{i, j, r00};
    }
    return NotExactOneQuery{NotExactOneQuery::Reason::AndTypeOnTwo, 2};
}

bool in_exact_one_query_family(const Classification& cl) {
    return std::holds_alternative<Dictator>(cl) || std::holds_alternative<ParityPair>(cl);
}

ExactCircuit synthesize(const Classification& cl, int n) {
    if (const auto* d = std::get_if<Dictator>(&cl)) {
        if (d->i < 1 || d->i > n) {
            throw std::invalid_argument("dictator variable out of range");
        }
        return synthesize_dictator(*d, n);
    }
    if (const auto* p = std::get_if<ParityPair>(&cl)) {
        if (p->i < 1 || p->j <= p->i || p->j > n) {
            throw std::invalid_argument("parity pair out of range");
        }
        return synthesize_parity(*p, n);
    }
    throw std::invalid_argument("synthesize expects a dictator or parity pair");
}

bool verify_family(const TruthTable& f) {
    Classification cl = classify(f);
    if (!in_exact_one_query_family(cl)) {
        return false;
    }
    return is_exact(synthesize(cl, f.n()), f);
}

DeutschJozsaDemo deutsch_jozsa(int n) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("deutsch_jozsa supports 1 <= n <= 4");
    }
    if (n % 2 != 0) {
        throw std::invalid_argument("deutsch_jozsa needs even n: no balanced strings otherwise");
    }

    TruthTable table;
    {
        TruthTable t = TruthTable::from_function(n, [n](uint32_t x) {
            return std::popcount(x) == n / 2 ? 1 : 0;
        });
        for (uint32_t x = 0; x < t.num_inputs(); ++x) {
            int pc = std::popcount(x);
            t.set_domain(x, pc == 0 || pc == n || pc == n / 2);
        }
        table = std::move(t);
    }

    // d = 2n is a power of two for n in {2,4}; a scaled Hadamard power with
    // its first two columns swapped sends |0> to the uniform +-phase state
    // sum_i (|i,0> - |i,1>)/sqrt(2n).
    int dim = 2 * n;
    QSqrt2 scale = dim == 4 ? kHalf : QSqrt2(Rational(0), Rational(1, 4));
    Matrix<ExactComplex> u0(dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            int src = c == 0 ? 1 : (c == 1 ? 0 : c);
            int sign = std::popcount(static_cast<unsigned>(r & src)) % 2 ? -1 : 1;
            u0(r, c) = ExactComplex(sign > 0 ? scale : -scale);
        }
    }
    Matrix<ExactComplex> u1 = u0.adjoint();

    Measurement<ExactComplex> m;
    m.kind = MeasurementKind::Projective;
    m.e1 = Matrix<ExactComplex>::identity(dim);
    m.e1(0, 0) = ExactComplex();

    std::vector<Matrix<ExactComplex>> us;
    us.push_back(std::move(u0));
    us.push_back(std::move(u1));
    ExactCircuit circuit(n, 1, std::move(us), std::move(m));
    return DeutschJozsaDemo{std::move(table), std::move(circuit)};
}

nlohmann::json classification_to_json(const Classification& cl) {
    if (const auto* c = std::get_if<Constant>(&cl)) {
        return {{"kind", "constant"}, {"value", c->value}};
    }
    if (const auto* d = std::get_if<Dictator>(&cl)) {
        return {{"kind", "dictator"}, {"i", d->i}, {"negated", d->negated}};
    }
    if (const auto* p = std::get_if<ParityPair>(&cl)) {
        return {{"kind", "parity_pair"}, {"i", p->i}, {"j", p->j}, {"negated", p->negated}};
    }
    const auto& nq = std::get<NotExactOneQuery>(cl);
    nlohmann::json j{{"kind", "not_exact_one_query"}};
    if (nq.reason == NotExactOneQuery::Reason::DependsOnTooMany) {
        j["reason"] = "depends_on_too_many";
        j["dependent_count"] = nq.dependent_count;
    } else {
        j["reason"] = "and_type_on_two";
    }
    return j;
}

}  // namespace exact1q
