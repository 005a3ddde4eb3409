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

#include "exact1q/circuit.hpp"

namespace exact1q {

std::vector<uint32_t> oracle_permutation(int n, int K, uint32_t x) {
    std::vector<uint32_t> perm(static_cast<size_t>(2) * n * K);
    for (int i = 1; i <= n; ++i) {
        int xi = static_cast<int>((x >> (n - i)) & 1u);
        for (int b = 0; b < 2; ++b) {
            for (int k = 0; k < K; ++k) {
                perm[state_index(i, b, k, K)] =
                    static_cast<uint32_t>(state_index(i, b ^ xi, k, K));
            }
        }
    }
    return perm;
}

}  // namespace exact1q
