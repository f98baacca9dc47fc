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

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace geuler {

using Integer = mpz_class;

/// p-adic valuation of a nonzero integer, or of zero as +infinity.
class Valuation {
public:
    constexpr explicit Valuation(long v) : value_(v), infinite_(false) {}

    static constexpr Valuation infinity() { return Valuation(); }

    constexpr bool is_infinite() const { return infinite_; }

    long value() const
    {
        if (infinite_) {
            throw std::logic_error("valuation of zero is infinite");
        }
        return value_;
    }

    friend constexpr bool operator==(Valuation a, Valuation b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b)
    {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }

    friend constexpr Valuation operator+(Valuation a, Valuation b)
    {
        if (a.infinite_ || b.infinite_) {
            return infinity();
        }
        return Valuation(a.value_ + b.value_);
    }

    std::string str() const { return infinite_ ? std::string("inf") : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.str(); }

private:
    constexpr Valuation() : value_(0), infinite_(true) {}

    long value_;
    bool infinite_;
};

/// Exponent of p in n; n = 0 gives infinity.
inline Valuation padic_valuation(const Integer& n, unsigned long p)
{
    if (p < 2) {
        throw std::invalid_argument("padic_valuation: p must be at least 2");
    }
    if (n == 0) {
        return Valuation::infinity();
    }
    Integer m = abs(n);
    long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return Valuation(v);
}

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(const Integer& num, const Integer& den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Accepts "a", "-a", "a/b".
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(Integer(s, 10));
            }
            return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    Rational inverse() const { return Rational(1) / *this; }

    Rational pow(unsigned long e) const
    {
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
        return Rational(mpq_class(n, d));
    }

    /// "num/den", with "/den" omitted for integers.
    std::string str() const
    {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

/// v_p(num) - v_p(den).
inline Valuation padic_valuation(const Rational& r, unsigned long p)
{
    if (r.is_zero()) {
        return Valuation::infinity();
    }
    return Valuation(padic_valuation(r.num(), p).value() - padic_valuation(r.den(), p).value());
}

inline Integer ipow(const Integer& base, unsigned long e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace geuler
