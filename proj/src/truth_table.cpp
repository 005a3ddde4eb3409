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

#include "exact1q/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace exact1q {

namespace {

int log2_exact(size_t len) {
    if (len < 2 || (len & (len - 1)) != 0) {
        return -1;
    }
    return std::countr_zero(len);
}

std::vector<uint64_t> make_words(int n) {
    return std::vector<uint64_t>(((size_t{1} << n) + 63) / 64);
}

void require_total(const TruthTable& f, const char* op) {
    if (!f.is_total()) {
        throw std::invalid_argument(std::string(op) + ": partial tables are not supported");
    }
}

}  // namespace

TruthTable TruthTable::parse(const std::string& text) {
    int n = log2_exact(text.size());
    if (n < 0) {
        throw std::invalid_argument("truth table length must be a power of two >= 2");
    }
    if (n > kMaxVars) {
        throw std::invalid_argument("truth table exceeds " + std::to_string(kMaxVars) +
                                    " variables");
    }
    TruthTable t;
    t.n_ = n;
    t.values_ = make_words(n);
    t.domain_ = make_words(n);
    for (uint32_t idx = 0; idx < text.size(); ++idx) {
        switch (text[idx]) {
            case '0':
                t.set_domain(idx, true);
                break;
            case '1':
                t.set_value(idx, 1);
                t.set_domain(idx, true);
                break;
            case '*':
                break;
            default:
                throw std::invalid_argument(std::string("illegal truth table character '") +
                                            text[idx] + "'");
        }
    }
    return t;
}

TruthTable TruthTable::from_packed(int n, uint64_t values) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("from_packed supports 1 <= n <= 6");
    }
    TruthTable t;
    t.n_ = n;
    t.values_ = make_words(n);
    t.domain_ = make_words(n);
    uint32_t size = t.num_inputs();
    for (uint32_t idx = 0; idx < size; ++idx) {
        t.set_value(idx, static_cast<int>((values >> idx) & 1u));
        t.set_domain(idx, true);
    }
    return t;
}

TruthTable TruthTable::from_function(int n, const std::function<int(uint32_t)>& f) {
    if (n < 1 || n > kMaxVars) {
        throw std::invalid_argument("variable count out of range");
    }
    TruthTable t;
    t.n_ = n;
    t.values_ = make_words(n);
    t.domain_ = make_words(n);
    uint32_t size = t.num_inputs();
    for (uint32_t idx = 0; idx < size; ++idx) {
        t.set_value(idx, f(idx) & 1);
        t.set_domain(idx, true);
    }
    return t;
}

bool TruthTable::is_total() const {
    uint32_t size = num_inputs();
    for (uint32_t idx = 0; idx < size; ++idx) {
        if (!in_domain(idx)) {
            return false;
        }
    }
    return true;
}

uint32_t TruthTable::domain_size() const {
    uint32_t count = 0;
    uint32_t size = num_inputs();
    for (uint32_t idx = 0; idx < size; ++idx) {
        count += in_domain(idx) ? 1 : 0;
    }
    return count;
}

bool TruthTable::is_constant_on_domain() const {
    int seen = -1;
    uint32_t size = num_inputs();
    for (uint32_t idx = 0; idx < size; ++idx) {
        if (!in_domain(idx)) {
            continue;
        }
        if (seen < 0) {
            seen = value(idx);
        } else if (value(idx) != seen) {
            return false;
        }
    }
    return true;
}

std::string TruthTable::str() const {
    uint32_t size = num_inputs();
    std::string out(size, '*');
    for (uint32_t idx = 0; idx < size; ++idx) {
        if (in_domain(idx)) {
            out[idx] = value(idx) ? '1' : '0';
        }
    }
    return out;
}

uint64_t TruthTable::packed_values() const {
    if (n_ > 6) {
        throw std::logic_error("packed_values requires n <= 6");
    }
    return values_[0];
}

Transform Transform::identity(int n) {
    Transform t;
    t.perm.resize(n);
    for (int i = 0; i < n; ++i) {
        t.perm[i] = i + 1;
    }
    return t;
}

Transform Transform::inverse() const {
    // Composing (sigma', m', o') after (sigma, m, o) yields the identity iff
    // sigma' = sigma^-1, m'_i = m_{sigma(i)} and o' = o.
    int n = static_cast<int>(perm.size());
    Transform inv;
    inv.perm.resize(n);
    inv.input_neg = 0;
    inv.output_neg = output_neg;
    for (int i = 1; i <= n; ++i) {
        inv.perm[perm[i - 1] - 1] = i;
    }
    for (int i = 1; i <= n; ++i) {
        if ((input_neg >> (perm[i - 1] - 1)) & 1u) {
            inv.input_neg |= VarSet{1} << (i - 1);
        }
    }
    return inv;
}

bool depends_on(const TruthTable& f, int i) {
    require_total(f, "depends_on");
    if (i < 1 || i > f.n()) {
        throw std::invalid_argument("variable index out of range");
    }
    uint32_t flip = uint32_t{1} << (f.n() - i);
    uint32_t size = f.num_inputs();
    for (uint32_t idx = 0; idx < size; ++idx) {
        if (f.value(idx) != f.value(idx ^ flip)) {
            return true;
        }
    }
    return false;
}

std::vector<int> dependent_set(const TruthTable& f) {
    require_total(f, "dependent_set");
    std::vector<int> vars;
    for (int i = 1; i <= f.n(); ++i) {
        if (depends_on(f, i)) {
            vars.push_back(i);
        }
    }
    return vars;
}

TruthTable apply_transform(const TruthTable& f, const Transform& t) {
    require_total(f, "apply_transform");
    int n = f.n();
    if (static_cast<int>(t.perm.size()) != n) {
        throw std::invalid_argument("transform arity does not match table");
    }
    std::vector<bool> seen(n + 1, false);
    for (int p : t.perm) {
        if (p < 1 || p > n || seen[p]) {
            throw std::invalid_argument("transform permutation is not a bijection");
        }
        seen[p] = true;
    }

    // Input-index image of the variable-space negation mask.
    uint32_t mask_idx = 0;
    for (int i = 1; i <= n; ++i) {
        if ((t.input_neg >> (i - 1)) & 1u) {
            mask_idx |= uint32_t{1} << (n - i);
        }
    }

    TruthTable g = f;
    uint32_t size = f.num_inputs();
    for (uint32_t x = 0; x < size; ++x) {
        uint32_t z = x ^ mask_idx;
        uint32_t y = 0;
        for (int i = 1; i <= n; ++i) {
            int bit = static_cast<int>((z >> (n - t.perm[i - 1])) & 1u);
            y |= static_cast<uint32_t>(bit) << (n - i);
        }
        g.set_value(x, f.value(y) ^ t.output_neg);
    }
    return g;
}

namespace {

void for_each_transform(int n, const std::function<void(const Transform&)>& fn) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        perm[i] = i + 1;
    }
    do {
        for (VarSet mask = 0; mask < (VarSet{1} << n); ++mask) {
            for (int neg = 0; neg < 2; ++neg) {
                Transform t;
                t.perm = perm;
                t.input_neg = mask;
                t.output_neg = neg;
                fn(t);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

CanonicalForm npn_canonical(const TruthTable& f) {
    require_total(f, "npn_canonical");
    if (f.n() > 4) {
        throw std::invalid_argument("npn_canonical refuses n > 4");
    }
    CanonicalForm best;
    std::string best_str;
    for_each_transform(f.n(), [&](const Transform& t) {
        TruthTable g = apply_transform(f, t);
        std::string s = g.str();
        if (best_str.empty() || s < best_str) {
            best_str = std::move(s);
            best.table = std::move(g);
            best.transform = t;
        }
    });
    return best;
}

void enumerate_all(int n, const std::function<void(const TruthTable&)>& fn) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("enumerate_all supports 1 <= n <= 4");
    }
    uint64_t count = uint64_t{1} << (uint64_t{1} << n);
    for (uint64_t v = 0; v < count; ++v) {
        fn(TruthTable::from_packed(n, v));
    }
}

VarSet varset_from_index_diff(int n, uint32_t diff) {
    VarSet s = 0;
    for (int i = 1; i <= n; ++i) {
        if ((diff >> (n - i)) & 1u) {
            s |= VarSet{1} << (i - 1);
        }
    }
    return s;
}

}  // namespace exact1q
