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

#include "exact1q/decision_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace exact1q {

DecisionTree DecisionTree::make_leaf(int bit) {
    DecisionTree t;
    t.leaf = bit & 1;
    return t;
}

DecisionTree DecisionTree::make_node(int var, DecisionTree lo, DecisionTree hi) {
    DecisionTree t;
    t.var = var;
    t.lo = std::make_unique<DecisionTree>(std::move(lo));
    t.hi = std::make_unique<DecisionTree>(std::move(hi));
    return t;
}

DecisionTree DecisionTree::clone() const {
    DecisionTree t;
    t.var = var;
    t.leaf = leaf;
    if (lo) t.lo = std::make_unique<DecisionTree>(lo->clone());
    if (hi) t.hi = std::make_unique<DecisionTree>(hi->clone());
    return t;
}

int evaluate_tree(const DecisionTree& t, int n, uint32_t x) {
    const DecisionTree* node = &t;
    while (!node->is_leaf()) {
        if (node->var < 1 || node->var > n || !node->lo || !node->hi) {
            throw std::invalid_argument("malformed decision tree");
        }
        int bit = static_cast<int>((x >> (n - node->var)) & 1u);
        node = bit ? node->hi.get() : node->lo.get();
    }
    return node->leaf;
}

int tree_depth(const DecisionTree& t) {
    if (t.is_leaf()) {
        return 0;
    }
    return 1 + std::max(tree_depth(*t.lo), tree_depth(*t.hi));
}

namespace {

// A restriction of f: value bits masked down to the live domain, so
// don't-care positions compare equal between restrictions.
struct Restriction {
    std::vector<uint64_t> values;
    std::vector<uint64_t> domain;

    bool operator==(const Restriction& o) const = default;
};

struct RestrictionHash {
    size_t operator()(const Restriction& r) const {
        size_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](uint64_t w) {
            h ^= w;
            h *= 0x100000001b3ull;
        };
        for (uint64_t w : r.values) mix(w);
        for (uint64_t w : r.domain) mix(w);
        return h;
    }
};

class TreeSearch {
  public:
    explicit TreeSearch(const TruthTable& f) : f_(f), n_(f.n()) {}

    Restriction root() const {
        Restriction r{f_.value_words(), f_.domain_words()};
        for (size_t w = 0; w < r.values.size(); ++w) {
            r.values[w] &= r.domain[w];
        }
        return r;
    }

    bool domain_empty(const Restriction& r) const {
        return std::all_of(r.domain.begin(), r.domain.end(), [](uint64_t w) { return w == 0; });
    }

    // -1 = nonconstant on domain, else the constant value (0 on empty).
    int constant_value(const Restriction& r) const {
        bool any_zero = false;
        bool any_one = false;
        for (size_t w = 0; w < r.domain.size(); ++w) {
            any_one |= (r.values[w] & r.domain[w]) != 0;
            any_zero |= (~r.values[w] & r.domain[w]) != 0;
        }
        if (any_zero && any_one) return -1;
        return any_one ? 1 : 0;
    }

    Restriction restrict(const Restriction& r, int var, int bit) const {
        Restriction out = r;
        uint32_t size = uint32_t{1} << n_;
        uint32_t pos = uint32_t{1} << (n_ - var);
        for (uint32_t idx = 0; idx < size; ++idx) {
            if (static_cast<int>((idx & pos) != 0) != bit) {
                out.domain[idx >> 6] &= ~(uint64_t{1} << (idx & 63u));
                out.values[idx >> 6] &= ~(uint64_t{1} << (idx & 63u));
            }
        }
        return out;
    }

    int depth(const Restriction& r) {
        int c = constant_value(r);
        if (c >= 0) {
            return 0;
        }
        auto it = memo_.find(r);
        if (it != memo_.end()) {
            return it->second;
        }
        int best = n_ + 1;
        for (int var = 1; var <= n_; ++var) {
            Restriction lo = restrict(r, var, 0);
            Restriction hi = restrict(r, var, 1);
            if (domain_empty(lo) || domain_empty(hi)) {
                continue;  // no information gained by querying var
            }
            best = std::min(best, 1 + std::max(depth(lo), depth(hi)));
        }
        memo_.emplace(r, best);
        return best;
    }

    DecisionTree build(const Restriction& r) {
        int c = constant_value(r);
        if (c >= 0) {
            return DecisionTree::make_leaf(c);
        }
        int best = n_ + 1;
        int best_var = 0;
        for (int var = 1; var <= n_; ++var) {
            Restriction lo = restrict(r, var, 0);
            Restriction hi = restrict(r, var, 1);
            if (domain_empty(lo) || domain_empty(hi)) {
                continue;
            }
            int d = 1 + std::max(depth(lo), depth(hi));
            if (d < best) {
                best = d;
                best_var = var;
            }
        }
        return DecisionTree::make_node(best_var, build(restrict(r, best_var, 0)),
                                       build(restrict(r, best_var, 1)));
    }

  private:
    const TruthTable& f_;
    int n_;
    std::unordered_map<Restriction, int, RestrictionHash> memo_;
};

}  // namespace

int decision_tree_depth(const TruthTable& f) {
    if (f.domain_size() == 0) {
        throw std::invalid_argument("decision_tree_depth: empty domain");
    }
    TreeSearch search(f);
    return search.depth(search.root());
}

DecisionTree build_optimal_tree(const TruthTable& f) {
    if (f.domain_size() == 0) {
        throw std::invalid_argument("build_optimal_tree: empty domain");
    }
    TreeSearch search(f);
    return search.build(search.root());
}

nlohmann::json tree_to_json(const DecisionTree& t) {
    if (t.is_leaf()) {
        return nlohmann::json{{"leaf", t.leaf}};
    }
    return nlohmann::json{
        {"var", t.var}, {"lo", tree_to_json(*t.lo)}, {"hi", tree_to_json(*t.hi)}};
}

DecisionTree tree_from_json(const nlohmann::json& j) {
    if (j.contains("leaf")) {
        return DecisionTree::make_leaf(j.at("leaf").get<int>());
    }
    return DecisionTree::make_node(j.at("var").get<int>(), tree_from_json(j.at("lo")),
                                   tree_from_json(j.at("hi")));
}

}  // namespace exact1q
