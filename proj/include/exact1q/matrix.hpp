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

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "exact1q/scalar.hpp"

namespace exact1q {

/// Dense square matrix over one of the simulator's scalar fields. Dimensions
/// stay tiny (d = 2nK <= 32) so no sparse or blocked machinery.
template <class S>
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, scalar_traits<S>::zero()) {}

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) {
            m(i, i) = scalar_traits<S>::one();
        }
        return m;
    }

    int dim() const { return dim_; }

    S& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const S& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    Matrix adjoint() const {
        Matrix m(dim_);
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) {
                m(c, r) = scalar_traits<S>::conj((*this)(r, c));
            }
        }
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.dim_ != y.dim_) {
            throw std::invalid_argument("matrix dimension mismatch");
        }
        Matrix m(x.dim_);
        for (int r = 0; r < x.dim_; ++r) {
            for (int k = 0; k < x.dim_; ++k) {
                const S& xrk = x(r, k);
                for (int c = 0; c < x.dim_; ++c) {
                    m(r, c) += xrk * y(k, c);
                }
            }
        }
        return m;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != dim_) {
            throw std::invalid_argument("matrix/vector dimension mismatch");
        }
        std::vector<S> out(dim_, scalar_traits<S>::zero());
        for (int r = 0; r < dim_; ++r) {
            S acc = scalar_traits<S>::zero();
            for (int c = 0; c < dim_; ++c) {
                acc += (*this)(r, c) * v[c];
            }
            out[r] = acc;
        }
        return out;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.dim_ == y.dim_ && x.a_ == y.a_;
    }

  private:
    int dim_ = 0;
    std::vector<S> a_;
};

template <class S>
typename scalar_traits<S>::real_type frobenius_distance_sqr(const Matrix<S>& x,
                                                            const Matrix<S>& y) {
    using T = scalar_traits<S>;
    typename T::real_type acc{};
    for (int r = 0; r < x.dim(); ++r) {
        for (int c = 0; c < x.dim(); ++c) {
            acc += T::norm_sqr(x(r, c) - y(r, c));
        }
    }
    return acc;
}

/// Exact field: literal equality. Float field: Frobenius distance <= tol.
template <class S>
bool matrices_equal(const Matrix<S>& x, const Matrix<S>& y, double tol = kFloatTol) {
    if (x.dim() != y.dim()) {
        return false;
    }
    if constexpr (scalar_traits<S>::is_exact) {
        return x == y;
    } else {
        return frobenius_distance_sqr(x, y) <= tol * tol;
    }
}

template <class S>
bool is_unitary(const Matrix<S>& u, double tol = kFloatTol) {
    return matrices_equal(u.adjoint() * u, Matrix<S>::identity(u.dim()), tol);
}

template <class S>
bool is_hermitian(const Matrix<S>& m, double tol = kFloatTol) {
    return matrices_equal(m, m.adjoint(), tol);
}

template <class S>
S inner_product(const std::vector<S>& x, const std::vector<S>& y) {
    S acc = scalar_traits<S>::zero();
    for (size_t k = 0; k < x.size(); ++k) {
        acc += scalar_traits<S>::conj(x[k]) * y[k];
    }
    return acc;
}

template <class S>
typename scalar_traits<S>::real_type vector_norm_sqr(const std::vector<S>& x) {
    using T = scalar_traits<S>;
    typename T::real_type acc{};
    for (const S& v : x) {
        acc += T::norm_sqr(v);
    }
    return acc;
}

/// <v| M |v>, returned as the real part (the imaginary part vanishes for
/// Hermitian M; exact arithmetic cancels it literally).
template <class S>
typename scalar_traits<S>::real_type quadratic_form(const Matrix<S>& m, const std::vector<S>& v) {
    return scalar_traits<S>::real(inner_product(v, m.apply(v)));
}

/// Positive semidefiniteness of a Hermitian matrix, decided through the
/// characteristic polynomial: with det(tI - M) = t^d + a_1 t^(d-1) + ... +
/// a_d, real spectrum is nonnegative iff every (-1)^k a_k >= 0. Coefficients
/// come from the Faddeev-LeVerrier recurrence, which stays inside the field.
template <class S>
bool is_positive_semidefinite(const Matrix<S>& m, double tol = kFloatTol) {
    using T = scalar_traits<S>;
    int d = m.dim();
    if (!is_hermitian(m, tol)) {
        return false;
    }
    // Scale-aware slack for the float field: |e_k| <= binom(d,k) * s^k where
    // s bounds the spectral radius via the max absolute row sum.
    double s = 1.0;
    if constexpr (!T::is_exact) {
        for (int r = 0; r < d; ++r) {
            double row = 0.0;
            for (int c = 0; c < d; ++c) {
                row += std::sqrt(T::real_to_double(T::norm_sqr(m(r, c))));
            }
            s = std::max(s, row);
        }
    }
    Matrix<S> mk = m;
    S ak = scalar_traits<S>::zero();
    double binom = 1.0;
    for (int k = 1; k <= d; ++k) {
        if (k > 1) {
            // M_k = M (M_{k-1} + a_{k-1} I)
            Matrix<S> shifted = mk;
            for (int i = 0; i < d; ++i) {
                shifted(i, i) += ak;
            }
            mk = m * shifted;
        }
        S trace = scalar_traits<S>::zero();
        for (int i = 0; i < d; ++i) {
            trace += mk(i, i);
        }
        ak = -(trace * T::from_rational(Rational(1, k)));
        // e_k = (-1)^k a_k must be nonnegative.
        auto ek = T::real(ak);
        if (k % 2) {
            ek = -ek;
        }
        if constexpr (T::is_exact) {
            if (ek.sign() < 0) {
                return false;
            }
        } else {
            binom *= static_cast<double>(d - k + 1) / k;
            double slack = tol * std::max(1.0, binom * std::pow(s, k));
            if (ek < -slack) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace exact1q
