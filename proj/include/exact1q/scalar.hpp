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

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace exact1q {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Global tolerance applied to every equality test in the float field.
inline constexpr double kFloatTol = 1e-9;

/// An element of the real field Q(sqrt(2)), stored as a + b*sqrt(2) with
/// exact rational a, b. Closed under +, -, *, / and ordered exactly.
class QSqrt2 {
  public:
    QSqrt2() = default;
    QSqrt2(int v) : a_(v) {}  // NOLINT: implicit by design, mirrors int->field
    explicit QSqrt2(Rational a) : a_(std::move(a)) {}
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

    QSqrt2& operator+=(const QSqrt2& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QSqrt2& operator-=(const QSqrt2& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QSqrt2& operator*=(const QSqrt2& o) {
        // (a + b√2)(c + d√2) = ac + 2bd + (ad + bc)√2
        Rational a = a_ * o.a_ + 2 * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }

    QSqrt2 inverse() const {
        // 1/(a + b√2) = (a - b√2)/(a² - 2b²); the denominator vanishes only
        // at zero since √2 is irrational.
        Rational d = a_ * a_ - 2 * b_ * b_;
        if (d == 0) {
            throw std::domain_error("QSqrt2: division by zero");
        }
        return QSqrt2(a_ / d, -b_ / d);
    }
    friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

    /// Exact sign: -1, 0 or +1.
    int sign() const {
        int sa = a_.sign();
        int sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Mixed signs: compare a² against 2b²; the rational term wins iff
        // a² > 2b².
        Rational lhs = a_ * a_;
        Rational rhs = 2 * b_ * b_;
        if (lhs == rhs) return 0;  // impossible for nonzero b, kept for safety
        return lhs > rhs ? sa : sb;
    }

    friend bool operator<(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QSqrt2& x, const QSqrt2& y) { return y < x; }
    friend bool operator<=(const QSqrt2& x, const QSqrt2& y) { return !(y < x); }
    friend bool operator>=(const QSqrt2& x, const QSqrt2& y) { return !(x < y); }

    double to_double() const {
        return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(2.0);
    }

    std::string str() const;

  private:
    Rational a_;
    Rational b_;
};

/// Complex numbers over Q(sqrt(2)): re + im*i with re, im in Q(sqrt(2)).
/// Supports everything the simulator needs with exact equality.
class ExactComplex {
  public:
    ExactComplex() = default;
    ExactComplex(int v) : re_(v) {}  // NOLINT: implicit by design
    ExactComplex(QSqrt2 re) : re_(std::move(re)) {}  // NOLINT
    ExactComplex(QSqrt2 re, QSqrt2 im) : re_(std::move(re)), im_(std::move(im)) {}

    const QSqrt2& real() const { return re_; }
    const QSqrt2& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    ExactComplex conj() const { return ExactComplex(re_, -im_); }
    QSqrt2 norm_sqr() const { return re_ * re_ + im_ * im_; }

    ExactComplex operator-() const { return ExactComplex(-re_, -im_); }

    ExactComplex& operator+=(const ExactComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o) {
        QSqrt2 re = re_ * o.re_ - im_ * o.im_;
        QSqrt2 im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend ExactComplex operator+(ExactComplex x, const ExactComplex& y) { return x += y; }
    friend ExactComplex operator-(ExactComplex x, const ExactComplex& y) { return x -= y; }
    friend ExactComplex operator*(ExactComplex x, const ExactComplex& y) { return x *= y; }

    ExactComplex inverse() const {
        QSqrt2 n = norm_sqr();
        if (n.is_zero()) {
            throw std::domain_error("ExactComplex: division by zero");
        }
        QSqrt2 inv = n.inverse();
        return ExactComplex(re_ * inv, -im_ * inv);
    }
    friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
        return x * y.inverse();
    }

    friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }
    friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }

    std::complex<double> to_complex() const {
        return {re_.to_double(), im_.to_double()};
    }

    std::string str() const;

  private:
    QSqrt2 re_;
    QSqrt2 im_;
};

/// Uniform scalar interface for the two number fields the simulator runs on.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<std::complex<double>> {
    using real_type = double;
    static constexpr bool is_exact = false;

    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
    static double norm_sqr(const std::complex<double>& z) { return std::norm(z); }
    static double real(const std::complex<double>& z) { return z.real(); }
    static double imag(const std::complex<double>& z) { return z.imag(); }
    static std::complex<double> from_rational(const Rational& num) {
        return {static_cast<double>(num), 0.0};
    }
    static double real_to_double(double r) { return r; }
    static bool real_is_zero(double r, double tol) { return std::abs(r) <= tol; }
};

template <>
struct scalar_traits<ExactComplex> {
    using real_type = QSqrt2;
    static constexpr bool is_exact = true;

    static ExactComplex zero() { return {}; }
    static ExactComplex one() { return ExactComplex(1); }
    static ExactComplex conj(const ExactComplex& z) { return z.conj(); }
    static QSqrt2 norm_sqr(const ExactComplex& z) { return z.norm_sqr(); }
    static QSqrt2 real(const ExactComplex& z) { return z.real(); }
    static QSqrt2 imag(const ExactComplex& z) { return z.imag(); }
    static ExactComplex from_rational(const Rational& num) {
        return ExactComplex(QSqrt2(num));
    }
    static double real_to_double(const QSqrt2& r) { return r.to_double(); }
    static bool real_is_zero(const QSqrt2& r, double /*tol*/) { return r.is_zero(); }
};

}  // namespace exact1q
