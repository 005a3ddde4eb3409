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

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "exact1q/truth_table.hpp"

namespace exact1q {

/// A deterministic query tree: a leaf holds the output bit, an inner node
/// queries variable `var` and descends to `lo` on 0, `hi` on 1. No variable
/// repeats on a root-to-leaf path.
struct DecisionTree {
    int var = 0;  // 1-based query variable; 0 marks a leaf
    int leaf = 0;
    std::unique_ptr<DecisionTree> lo;
    std::unique_ptr<DecisionTree> hi;

    bool is_leaf() const { return var == 0; }

    static DecisionTree make_leaf(int bit);
    static DecisionTree make_node(int var, DecisionTree lo, DecisionTree hi);

    DecisionTree clone() const;
};

/// Follows x's bits from the root; returns the leaf label.
int evaluate_tree(const DecisionTree& t, int n, uint32_t x);

/// Longest root-to-leaf path; a leaf has depth 0.
int tree_depth(const DecisionTree& t);

/// Exact deterministic query complexity D(f). Partial tables ask for the
/// depth needed to determine f on its domain. Throws on an empty domain.
int decision_tree_depth(const TruthTable& f);

/// A tree achieving decision_tree_depth(f). Ties between optimal split
/// variables go to the smallest index; off-domain leaves hold 0.
DecisionTree build_optimal_tree(const TruthTable& f);

/// Nested JSON: {"leaf": b} | {"var": i, "lo": ..., "hi": ...}.
nlohmann::json tree_to_json(const DecisionTree& t);
DecisionTree tree_from_json(const nlohmann::json& j);

}  // namespace exact1q
