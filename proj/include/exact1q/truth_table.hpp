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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exact1q {

/// Set of variable indices packed as a bitmask: bit (i-1) stands for
/// variable i. Distinct from the *input index* convention below.
using VarSet = uint32_t;

/// A (possibly partial) Boolean function on n <= 16 bits.
///
/// Input indices follow the fixed convention
///     index(x) = sum_{i=1..n} x_i * 2^(n-i),
/// i.e. x_1 is the most significant bit of the index. A table is total when
/// every input lies in the domain; partial tables mark missing inputs with
/// '*' in the text format.
class TruthTable {
  public:
    static constexpr int kMaxVars = 16;

    /// Parses a string over {0,1,*} whose length is a power of two >= 2.
    /// Character at position idx gives f at input index idx; '*' marks
    /// inputs outside the domain.
    static TruthTable parse(const std::string& text);

    /// Builds a total table for n <= 6 from packed values (bit idx of
    /// `values` is f at input index idx).
    static TruthTable from_packed(int n, uint64_t values);

    /// Builds a table by evaluating `f` at every input index; total domain.
    static TruthTable from_function(int n, const std::function<int(uint32_t)>& f);

    TruthTable() = default;

    int n() const { return n_; }
    uint32_t num_inputs() const { return uint32_t{1} << n_; }

    int value(uint32_t index) const { return get_bit(values_, index); }
    bool in_domain(uint32_t index) const { return get_bit(domain_, index) != 0; }

    void set_value(uint32_t index, int bit) { set_bit(values_, index, bit); }
    void set_domain(uint32_t index, bool inside) { set_bit(domain_, index, inside ? 1 : 0); }

    bool is_total() const;
    uint32_t domain_size() const;

    /// True when f takes a single value over its whole domain (an empty
    /// domain counts as constant).
    bool is_constant_on_domain() const;

    /// Bit of variable i (1-based) inside an input index.
    int input_bit(uint32_t index, int var) const {
        return static_cast<int>((index >> (n_ - var)) & 1u);
    }

    /// Text form over {0,1,*}, inverse of parse().
    std::string str() const;

    /// Packed values for n <= 6 (used as compact map keys by callers).
    uint64_t packed_values() const;

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.n_ == b.n_ && a.values_ == b.values_ && a.domain_ == b.domain_;
    }
    friend bool operator!=(const TruthTable& a, const TruthTable& b) { return !(a == b); }

    const std::vector<uint64_t>& value_words() const { return values_; }
    const std::vector<uint64_t>& domain_words() const { return domain_; }

  private:
    static int get_bit(const std::vector<uint64_t>& words, uint32_t index) {
        return static_cast<int>((words[index >> 6] >> (index & 63u)) & 1u);
    }
    static void set_bit(std::vector<uint64_t>& words, uint32_t index, int bit) {
        uint64_t mask = uint64_t{1} << (index & 63u);
        if (bit) {
            words[index >> 6] |= mask;
        } else {
            words[index >> 6] &= ~mask;
        }
    }

    int n_ = 0;
    std::vector<uint64_t> values_;
    std::vector<uint64_t> domain_;
};

/// Input/output relabeling: permute variables, negate a subset of inputs and
/// optionally the output. Applying a transform then its inverse is the
/// identity on any table.
struct Transform {
    /// perm[i-1] = sigma(i), a bijection on {1..n}.
    std::vector<int> perm;
    /// Bit (i-1) set = negate variable i (applied before permuting).
    VarSet input_neg = 0;
    int output_neg = 0;

    static Transform identity(int n);
    Transform inverse() const;

    friend bool operator==(const Transform& a, const Transform& b) {
        return a.perm == b.perm && a.input_neg == b.input_neg && a.output_neg == b.output_neg;
    }
};

/// True iff some input flips f when bit i (1-based) is flipped. Total tables
/// only.
bool depends_on(const TruthTable& f, int i);

/// All variables f depends on, ascending. Total tables only.
std::vector<int> dependent_set(const TruthTable& f);

/// g(x) = f(pi(x ^ mask)) ^ output_neg where pi(z)_i = z_{sigma(i)}: inputs
/// are negated first, then positions permuted, then the output negated.
/// Total tables only.
TruthTable apply_transform(const TruthTable& f, const Transform& t);

struct CanonicalForm {
    TruthTable table;
    Transform transform;  // apply_transform(f, transform) == table
};

/// Lexicographically smallest values string reachable by any Transform, with
/// one witnessing transform. Brute force over all n! * 2^n * 2 transforms;
/// total tables with n <= 4 only.
CanonicalForm npn_canonical(const TruthTable& f);

/// Calls `fn` on every total table on n <= 4 variables exactly once, in
/// increasing order of packed values.
void enumerate_all(int n, const std::function<void(const TruthTable&)>& fn);

/// Variable set {i : bit (n-i) differs between the two input indices}.
VarSet varset_from_index_diff(int n, uint32_t diff);

}  // namespace exact1q
