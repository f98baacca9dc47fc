// Copyright 2026 The geuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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
#include <utility>
#include <vector>

#include "geuler/binomial.hpp"
#include "geuler/cyclotomic.hpp"
#include "geuler/polynomial.hpp"

namespace geuler {

/// Library default for the truncation order L of exponential series.
inline constexpr std::size_t default_truncation = 16;

/// Truncated exponential generating function sum_{n<=L} c_n t^n / n!.
/// Binary operations truncate to the smaller order bound of their operands.
template <ExactRing T>
class basic_egf {
public:
    /// Zero series with order bound L.
    explicit basic_egf(std::size_t order_bound) : coeffs_(order_bound + 1, T(Rational(0))) {}

    explicit basic_egf(std::vector<T> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("basic_egf: at least one coefficient is required");
        }
    }

    /// The series 1.
    static basic_egf one(std::size_t order_bound)
    {
        basic_egf out(order_bound);
        out.coeffs_[0] = T(Rational(1));
        return out;
    }

    std::size_t order_bound() const { return coeffs_.size() - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    const T& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// Same series with a smaller order bound.
    basic_egf truncate(std::size_t order_bound) const
    {
        if (order_bound > this->order_bound()) {
            throw std::invalid_argument("basic_egf: cannot extend a truncated series");
        }
        return basic_egf(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order_bound) + 1));
    }

    basic_egf& operator+=(const basic_egf& o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), T(Rational(0)));
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] = coeffs_[n] + o.coeffs_[n];
        }
        return *this;
    }

    basic_egf& operator-=(const basic_egf& o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), T(Rational(0)));
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] = coeffs_[n] - o.coeffs_[n];
        }
        return *this;
    }

    basic_egf& operator*=(const T& s)
    {
        for (auto& c : coeffs_) {
            c = c * s;
        }
        return *this;
    }

    friend basic_egf operator+(basic_egf a, const basic_egf& b) { return a += b; }
    friend basic_egf operator-(basic_egf a, const basic_egf& b) { return a -= b; }
    friend basic_egf operator*(basic_egf a, const T& s) { return a *= s; }
    friend bool operator==(const basic_egf& a, const basic_egf& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<T> coeffs_;
};

using TruncatedEGF = basic_egf<CycloRational>;

/// e^{a t}: coefficients a^n.
template <ExactRing T>
basic_egf<T> egf_exp(const T& a, std::size_t order_bound)
{
    std::vector<T> c;
    c.reserve(order_bound + 1);
    c.push_back(T(Rational(1)));
    for (std::size_t n = 1; n <= order_bound; ++n) {
        c.push_back(c.back() * a);
    }
    return basic_egf<T>(std::move(c));
}

inline TruncatedEGF egf_exp(const Rational& a, std::size_t order_bound)
{
    return egf_exp(CycloRational(a), order_bound);
}

/// Binomial convolution: h_n = sum_i C(n,i) f_i g_{n-i}.
template <ExactRing T>
basic_egf<T> egf_mul(const basic_egf<T>& f, const basic_egf<T>& g)
{
    const std::size_t L = std::min(f.order_bound(), g.order_bound());
    std::vector<T> h(L + 1, T(Rational(0)));
    for (std::size_t n = 0; n <= L; ++n) {
        const auto& row = PascalTriangle::instance().row(n);
        T acc = T(Rational(0));
        for (std::size_t i = 0; i <= n; ++i) {
            if (f[i].is_zero() || g[n - i].is_zero()) {
                continue;
            }
            acc = acc + f[i] * g[n - i] * Rational(row[i]);
        }
        h[n] = std::move(acc);
    }
    return basic_egf<T>(std::move(h));
}

/// h with h * g = f up to the common order bound, by forward substitution:
/// h_n = (f_n - sum_{i<n} C(n,i) h_i g_{n-i}) / g_0.
template <ExactField T>
basic_egf<T> egf_div(const basic_egf<T>& f, const basic_egf<T>& g)
{
    if (g[0].is_zero()) {
        throw std::domain_error("egf_div: divisor has zero constant term");
    }
    const std::size_t L = std::min(f.order_bound(), g.order_bound());
    const T g0_inv = T(Rational(1)) / g[0];
    std::vector<T> h;
    h.reserve(L + 1);
    for (std::size_t n = 0; n <= L; ++n) {
        const auto& row = PascalTriangle::instance().row(n);
        T acc = f[n];
        for (std::size_t i = 0; i < n; ++i) {
            if (h[i].is_zero() || g[n - i].is_zero()) {
                continue;
            }
            acc = acc - h[i] * g[n - i] * Rational(row[i]);
        }
        h.push_back(acc * g0_inv);
    }
    return basic_egf<T>(std::move(h));
}

/// Substitution t -> w t: coefficients w^n f_n.
template <ExactRing T>
basic_egf<T> egf_scale_arg(const basic_egf<T>& f, const Rational& w)
{
    std::vector<T> c;
    c.reserve(f.order_bound() + 1);
    Rational wn(1);
    for (std::size_t n = 0; n <= f.order_bound(); ++n) {
        c.push_back(f[n] * wn);
        wn *= w;
    }
    return basic_egf<T>(std::move(c));
}

/// Coefficientwise conversion, e.g. TruncatedEGF -> basic_egf<XPoly>.
template <ExactRing To, ExactRing From>
basic_egf<To> convert_coeffs(const basic_egf<From>& f)
{
    std::vector<To> out;
    out.reserve(f.order_bound() + 1);
    for (const auto& c : f.coeffs()) {
        out.push_back(To(c));
    }
    return basic_egf<To>(std::move(out));
}

}  // namespace geuler
