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

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "geuler/binomial.hpp"
#include "geuler/cyclotomic.hpp"
#include "geuler/rational.hpp"

namespace geuler {

/// Exact commutative coefficient ring that admits rational scalars.
template <class T>
concept ExactRing = std::regular<T> && std::constructible_from<T, Rational> &&
                    requires(const T a, const T b, const Rational r) {
                        { a + b } -> std::convertible_to<T>;
                        { a - b } -> std::convertible_to<T>;
                        { a * b } -> std::convertible_to<T>;
                        { a * r } -> std::convertible_to<T>;
                        { -a } -> std::convertible_to<T>;
                        { a.is_zero() } -> std::convertible_to<bool>;
                    };

template <class T>
concept ExactField = ExactRing<T> && requires(const T a, const T b) {
    { a / b } -> std::convertible_to<T>;
};

/// Dense univariate polynomial in x; coefficient i multiplies x^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
template <ExactRing T>
class basic_xpoly {
public:
    using coefficient_type = T;

    basic_xpoly() = default;

    basic_xpoly(const T& c)
    {
        if (!c.is_zero()) {
            coeffs_.push_back(c);
        }
    }

    basic_xpoly(const Rational& r)
        requires(!std::same_as<T, Rational>)
        : basic_xpoly(T(r))
    {
    }

    basic_xpoly(long n) : basic_xpoly(T(Rational(n))) {}

    explicit basic_xpoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    basic_xpoly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    /// c * x^k.
    static basic_xpoly monomial(const T& c, std::size_t k)
    {
        std::vector<T> v(k + 1, T(Rational(0)));
        v[k] = c;
        return basic_xpoly(std::move(v));
    }

    static basic_xpoly x() { return monomial(T(Rational(1)), 1); }

    const std::vector<T>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(Rational(0)); }

    T leading() const { return coeffs_.empty() ? T(Rational(0)) : coeffs_.back(); }

    basic_xpoly operator-() const
    {
        basic_xpoly out = *this;
        for (auto& c : out.coeffs_) {
            c = -c;
        }
        return out;
    }

    basic_xpoly& operator+=(const basic_xpoly& o)
    {
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), T(Rational(0)));
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        }
        trim();
        return *this;
    }

    basic_xpoly& operator-=(const basic_xpoly& o) { return *this += -o; }

    basic_xpoly& operator*=(const basic_xpoly& o)
    {
        if (is_zero() || o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<T> out(coeffs_.size() + o.coeffs_.size() - 1, T(Rational(0)));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
            }
        }
        coeffs_ = std::move(out);
        trim();
        return *this;
    }

    basic_xpoly& operator*=(const Rational& r)
    {
        for (auto& c : coeffs_) {
            c = c * r;
        }
        trim();
        return *this;
    }

    friend basic_xpoly operator+(basic_xpoly a, const basic_xpoly& b) { return a += b; }
    friend basic_xpoly operator-(basic_xpoly a, const basic_xpoly& b) { return a -= b; }
    friend basic_xpoly operator*(basic_xpoly a, const basic_xpoly& b) { return a *= b; }
    friend basic_xpoly operator*(basic_xpoly a, const Rational& r) { return a *= r; }
    friend basic_xpoly operator*(const Rational& r, basic_xpoly a) { return a *= r; }

    friend bool operator==(const basic_xpoly& a, const basic_xpoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Horner evaluation at v.
    template <class U>
    auto operator()(const U& v) const
    {
        using R = decltype(std::declval<T>() * std::declval<U>());
        R acc = R(Rational(0));
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * v + R(coeffs_[i]);
        }
        return acc;
    }

    std::string str() const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            if constexpr (requires { coeffs_[i].str(); }) {
                out += coeffs_[i].str();
            }
        }
        return out + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const basic_xpoly& p) { return os << p.str(); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<T> coeffs_;
};

using XPoly = basic_xpoly<CycloRational>;
using RationalPoly = basic_xpoly<Rational>;

/// P(w*x + c), expanded.
template <ExactRing T>
basic_xpoly<T> poly_compose_affine(const basic_xpoly<T>& p, const Rational& w, const T& c)
{
    const basic_xpoly<T> inner({c, T(w)});
    basic_xpoly<T> acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * inner + basic_xpoly<T>(p.coeffs()[i]);
    }
    return acc;
}

template <ExactRing T>
    requires(!std::same_as<T, Rational>)
basic_xpoly<T> poly_compose_affine(const basic_xpoly<T>& p, const Rational& w, const Rational& c)
{
    return poly_compose_affine(p, w, T(c));
}

/// Coefficientwise conversion, e.g. RationalPoly -> XPoly.
template <ExactRing To, ExactRing From>
basic_xpoly<To> convert_coeffs(const basic_xpoly<From>& p)
{
    std::vector<To> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        out.push_back(To(c));
    }
    return basic_xpoly<To>(std::move(out));
}

}  // namespace geuler
