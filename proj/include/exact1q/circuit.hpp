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

#include <complex>
#include <variant>
#include <vector>

#include "exact1q/matrix.hpp"
#include "exact1q/scalar.hpp"
#include "exact1q/truth_table.hpp"

namespace exact1q {

enum class NumberField { Float, QSqrt2 };
enum class MeasurementKind { Projective, Povm };

/// State index convention: index(i, b, k) = ((i-1)*2 + b)*K + k for the
/// query register i in {1..n}, the target bit b and the ancilla k.
inline int state_index(int i, int b, int k, int K) {
    return ((i - 1) * 2 + b) * K + k;
}

/// Two-outcome measurement (E_0, E_1) with E_0 = I - E_1. Projective
/// measurements additionally satisfy E_1^2 = E_1.
template <class S>
struct Measurement {
    MeasurementKind kind = MeasurementKind::Projective;
    Matrix<S> e1;
};

/// A T-query algorithm on n input bits with ancilla dimension K: the state
/// space has dimension d = 2nK and the run is U_T O_x ... O_x U_0 |psi_0>
/// with |psi_0> the basis state of index 0. Construction validates
/// unitarity of every U_t and validity of the measurement (exactly over
/// Q(sqrt(2)), within 1e-9 for floats).
template <class S>
class Circuit {
  public:
    Circuit(int n, int K, std::vector<Matrix<S>> unitaries, Measurement<S> measurement)
        : n_(n), K_(K), unitaries_(std::move(unitaries)), measurement_(std::move(measurement)) {
        validate();
    }

    int n() const { return n_; }
    int K() const { return K_; }
    int queries() const { return static_cast<int>(unitaries_.size()) - 1; }
    int dim() const { return 2 * n_ * K_; }

    const std::vector<Matrix<S>>& unitaries() const { return unitaries_; }
    const Measurement<S>& measurement() const { return measurement_; }

  private:
    void validate() const;

    int n_;
    int K_;
    std::vector<Matrix<S>> unitaries_;
    Measurement<S> measurement_;
};

using FloatCircuit = Circuit<std::complex<double>>;
using ExactCircuit = Circuit<ExactComplex>;
using AnyCircuit = std::variant<FloatCircuit, ExactCircuit>;

/// The oracle O_x as a permutation p on state indices: p[index(i,b,k)] =
/// index(i, b ^ x_i, k). x is an input index under the MSB-first convention.
std::vector<uint32_t> oracle_permutation(int n, int K, uint32_t x);

/// Coefficients alpha_{ijk} of U_0 |psi_0>.
template <class S>
class AmplitudeTable {
  public:
    AmplitudeTable(int n, int K, std::vector<S> amps)
        : n_(n), K_(K), amps_(std::move(amps)) {}

    int n() const { return n_; }
    int K() const { return K_; }
    const S& alpha(int i, int j, int k) const { return amps_[state_index(i, j, k, K_)]; }
    const std::vector<S>& raw() const { return amps_; }

    typename scalar_traits<S>::real_type norm_sqr() const { return vector_norm_sqr(amps_); }

    /// beta_i = sum_k |alpha_{i0k} - alpha_{i1k}|^2.
    std::vector<typename scalar_traits<S>::real_type> beta_vector() const {
        std::vector<typename scalar_traits<S>::real_type> beta;
        beta.reserve(n_);
        for (int i = 1; i <= n_; ++i) {
            typename scalar_traits<S>::real_type acc{};
            for (int k = 0; k < K_; ++k) {
                acc += scalar_traits<S>::norm_sqr(alpha(i, 0, k) - alpha(i, 1, k));
            }
            beta.push_back(acc);
        }
        return beta;
    }

  private:
    int n_;
    int K_;
    std::vector<S> amps_;
};

template <class S>
std::vector<S> run_circuit(const Circuit<S>& c, uint32_t x);

template <class S>
typename scalar_traits<S>::real_type outcome_probability(const std::vector<S>& state,
                                                         const Measurement<S>& m, int outcome);

template <class S>
AmplitudeTable<S> amplitude_table(const Circuit<S>& c);

/// Worst-case error of c against f over f's domain: max over x of
/// 1 - P[outcome = f(x)].
template <class S>
typename scalar_traits<S>::real_type max_error(const Circuit<S>& c, const TruthTable& f);

/// Exact computation: every domain input yields the correct outcome with
/// probability 1 (literal equality over Q(sqrt(2)), >= 1 - 1e-9 for floats).
template <class S>
bool is_exact(const Circuit<S>& c, const TruthTable& f);

/// sum_{i in S} sum_k |alpha_{i0k} - alpha_{i1k}|^2 over the differing-bit
/// set S of (x, y). One-query circuits only.
template <class S>
typename scalar_traits<S>::real_type lemma1_sum(const Circuit<S>& c, uint32_t x, uint32_t y);

/// <phi_x | phi_y> with |phi_x> = O_x U_0 |psi_0>, computed directly from
/// state vectors. One-query circuits only.
template <class S>
S phi_inner_product(const Circuit<S>& c, uint32_t x, uint32_t y);

// ---------------------------------------------------------------------------
// Implementation
// ---------------------------------------------------------------------------

template <class S>
void Circuit<S>::validate() const {
    if (n_ < 1 || n_ > TruthTable::kMaxVars) {
        throw std::invalid_argument("circuit variable count out of range");
    }
    if (K_ < 1) {
        throw std::invalid_argument("ancilla dimension must be >= 1");
    }
    if (unitaries_.empty()) {
        throw std::invalid_argument("circuit needs at least U_0");
    }
    int d = dim();
    for (const Matrix<S>& u : unitaries_) {
        if (u.dim() != d) {
            throw std::invalid_argument("unitary dimension mismatch");
        }
        if (!is_unitary(u)) {
            throw std::invalid_argument("matrix is not unitary");
        }
    }
    const Matrix<S>& e1 = measurement_.e1;
    if (e1.dim() != d) {
        throw std::invalid_argument("measurement dimension mismatch");
    }
    if (!is_hermitian(e1)) {
        throw std::invalid_argument("E1 is not Hermitian");
    }
    if (measurement_.kind == MeasurementKind::Projective) {
        if (!matrices_equal(e1 * e1, e1)) {
            throw std::invalid_argument("projective E1 is not idempotent");
        }
    } else {
        Matrix<S> e0 = Matrix<S>::identity(d);
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                e0(r, c) -= e1(r, c);
            }
        }
        if (!is_positive_semidefinite(e1) || !is_positive_semidefinite(e0)) {
            throw std::invalid_argument("POVM elements are not positive semidefinite");
        }
    }
}

template <class S>
std::vector<S> run_circuit(const Circuit<S>& c, uint32_t x) {
    if (x >= (uint32_t{1} << c.n())) {
        throw std::invalid_argument("input index out of range");
    }
    int d = c.dim();
    std::vector<S> state(d, scalar_traits<S>::zero());
    state[0] = scalar_traits<S>::one();
    state = c.unitaries()[0].apply(state);
    if (c.queries() > 0) {
        std::vector<uint32_t> perm = oracle_permutation(c.n(), c.K(), x);
        for (int t = 1; t <= c.queries(); ++t) {
            std::vector<S> queried(d, scalar_traits<S>::zero());
            for (int s = 0; s < d; ++s) {
                queried[perm[s]] = state[s];
            }
            state = c.unitaries()[t].apply(queried);
        }
    }
    return state;
}

template <class S>
typename scalar_traits<S>::real_type outcome_probability(const std::vector<S>& state,
                                                         const Measurement<S>& m, int outcome) {
    auto p1 = quadratic_form(m.e1, state);
    if (outcome == 1) {
        return p1;
    }
    // E_0 = I - E_1, so p_0 = <psi|psi> - p_1; states are unit vectors.
    return vector_norm_sqr(state) - p1;
}

template <class S>
AmplitudeTable<S> amplitude_table(const Circuit<S>& c) {
    int d = c.dim();
    std::vector<S> state(d, scalar_traits<S>::zero());
    state[0] = scalar_traits<S>::one();
    return AmplitudeTable<S>(c.n(), c.K(), c.unitaries()[0].apply(state));
}

template <class S>
typename scalar_traits<S>::real_type max_error(const Circuit<S>& c, const TruthTable& f) {
    if (c.n() != f.n()) {
        throw std::invalid_argument("circuit/table dimension mismatch");
    }
    typename scalar_traits<S>::real_type worst{};
    uint32_t size = f.num_inputs();
    for (uint32_t x = 0; x < size; ++x) {
        if (!f.in_domain(x)) {
            continue;
        }
        std::vector<S> state = run_circuit(c, x);
        auto err = outcome_probability(state, c.measurement(), 1 - f.value(x));
        if (worst < err) {
            worst = err;
        }
    }
    return worst;
}

template <class S>
bool is_exact(const Circuit<S>& c, const TruthTable& f) {
    if (c.n() != f.n()) {
        throw std::invalid_argument("circuit/table dimension mismatch");
    }
    uint32_t size = f.num_inputs();
    for (uint32_t x = 0; x < size; ++x) {
        if (!f.in_domain(x)) {
            continue;
        }
        std::vector<S> state = run_circuit(c, x);
        auto p = outcome_probability(state, c.measurement(), f.value(x));
        if constexpr (scalar_traits<S>::is_exact) {
            if (p != typename scalar_traits<S>::real_type{1}) {
                return false;
            }
        } else {
            if (p < 1.0 - kFloatTol) {
                return false;
            }
        }
    }
    return true;
}

template <class S>
typename scalar_traits<S>::real_type lemma1_sum(const Circuit<S>& c, uint32_t x, uint32_t y) {
    if (c.queries() != 1) {
        throw std::invalid_argument("lemma1_sum requires a one-query circuit");
    }
    AmplitudeTable<S> at = amplitude_table(c);
    VarSet s = varset_from_index_diff(c.n(), x ^ y);
    typename scalar_traits<S>::real_type acc{};
    for (int i = 1; i <= c.n(); ++i) {
        if (!((s >> (i - 1)) & 1u)) {
            continue;
        }
        for (int k = 0; k < c.K(); ++k) {
            acc += scalar_traits<S>::norm_sqr(at.alpha(i, 0, k) - at.alpha(i, 1, k));
        }
    }
    return acc;
}

template <class S>
S phi_inner_product(const Circuit<S>& c, uint32_t x, uint32_t y) {
    if (c.queries() != 1) {
        throw std::invalid_argument("phi_inner_product requires a one-query circuit");
    }
    int d = c.dim();
    std::vector<S> prepared(d, scalar_traits<S>::zero());
    prepared[0] = scalar_traits<S>::one();
    prepared = c.unitaries()[0].apply(prepared);

    auto queried = [&](uint32_t input) {
        std::vector<uint32_t> perm = oracle_permutation(c.n(), c.K(), input);
        std::vector<S> out(d, scalar_traits<S>::zero());
        for (int s = 0; s < d; ++s) {
            out[perm[s]] = prepared[s];
        }
        return out;
    };
    return inner_product(queried(x), queried(y));
}

}  // namespace exact1q
