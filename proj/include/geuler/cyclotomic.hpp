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
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geuler/rational.hpp"

namespace geuler {

/// Integer polynomial, coefficient i multiplies x^i.
using IntPoly = std::vector<Integer>;

namespace detail {

inline std::vector<unsigned long> divisors(unsigned long m)
{
    std::vector<unsigned long> out;
    for (unsigned long k = 1; k * k <= m; ++k) {
        if (m % k == 0) {
            out.push_back(k);
            if (k != m / k) {
                out.push_back(m / k);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_prime(unsigned long n)
{
    if (n < 2) {
        return false;
    }
    for (unsigned long k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

// Exact quotient of integer polynomials by a monic divisor.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den)
{
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        return {};
    }
    IntPoly q(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        const Integer c = num[i];
        q[i - dd] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            num[i - dd + j] -= c * den[j];
        }
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (num[i] != 0) {
            throw std::logic_error("divide_monic: division is not exact");
        }
    }
    return q;
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    IntPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

class CyclotomicCache {
public:
    static CyclotomicCache& instance()
    {
        static CyclotomicCache cache;
        return cache;
    }

    std::shared_ptr<const IntPoly> get(unsigned long m)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(m); it != table_.end()) {
                return it->second;
            }
        }
        // Recursion takes the lock per divisor, so build outside it.
        IntPoly num(m + 1);
        num[0] = -1;
        num[m] = 1;
        for (unsigned long d : divisors(m)) {
            if (d < m) {
                num = divide_monic(std::move(num), *get(d));
            }
        }
        auto value = std::make_shared<const IntPoly>(std::move(num));
        std::unique_lock lock(mutex_);
        return table_.emplace(m, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<unsigned long, std::shared_ptr<const IntPoly>> table_;
};

}  // namespace detail

inline unsigned long euler_phi(unsigned long m)
{
    if (m == 0) {
        throw std::invalid_argument("euler_phi: m must be positive");
    }
    unsigned long result = m;
    unsigned long n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

/// The m-th cyclotomic polynomial, obtained by exact division
/// (x^m - 1) / prod_{d | m, d < m} Phi_d(x).
inline IntPoly cyclotomic_polynomial(unsigned long m)
{
    if (m == 0) {
        throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    }
    return *detail::CyclotomicCache::instance().get(m);
}

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
///
/// The representation is fully reduced modulo Phi_m, so two values of the
/// same order are equal iff their coefficient vectors are equal. Orders that
/// are 2 mod 4 are folded to m/2 (the fields coincide), with the convention
/// zeta_m^(M/m) = zeta_M used for every change of order. Binary operations on
/// operands of different order lift both to the lcm first.
class CycloRational {
public:
    CycloRational() : order_(1), coeffs_(1) {}
    CycloRational(long n) : order_(1), coeffs_{Rational(n)} {}
    CycloRational(const Rational& r) : order_(1), coeffs_{r} {}

    /// sum_i powers[i] * zeta_m^i, any length.
    static CycloRational from_powers(unsigned long m, std::vector<Rational> powers)
    {
        if (m == 0) {
            throw std::invalid_argument("CycloRational: order must be positive");
        }
        if (m % 4 == 2) {
            // zeta_{2h} = -zeta_h^((h+1)/2) for odd h.
            const unsigned long h = m / 2;
            const unsigned long step = (h + 1) / 2;
            std::vector<Rational> folded(h);
            for (std::size_t i = 0; i < powers.size(); ++i) {
                if (powers[i].is_zero()) {
                    continue;
                }
                const std::size_t target = (i % h) * step % h;
                if (i % 2 == 0) {
                    folded[target] += powers[i];
                } else {
                    folded[target] -= powers[i];
                }
            }
            return from_powers(h, std::move(folded));
        }
        CycloRational out;
        out.order_ = m;
        out.coeffs_ = reduce(m, std::move(powers));
        return out;
    }

    /// zeta_m^k.
    static CycloRational zeta(unsigned long m, unsigned long k = 1)
    {
        if (m == 0) {
            throw std::invalid_argument("CycloRational: order must be positive");
        }
        std::vector<Rational> powers(k % m + 1);
        powers[k % m] = 1;
        return from_powers(m, std::move(powers));
    }

    unsigned long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
    }

    bool is_rational() const
    {
        return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
    }

    /// The value as a Rational; throws unless is_rational().
    Rational to_rational() const
    {
        if (!is_rational()) {
            throw std::domain_error("CycloRational: value is not rational");
        }
        return coeffs_[0];
    }

    /// Same value in Q(zeta_target); target must be a multiple of order().
    CycloRational lift(unsigned long target) const
    {
        if (target == order_) {
            return *this;
        }
        if (target == 0 || target % order_ != 0) {
            throw std::invalid_argument("CycloRational: lift target must be a multiple of the order");
        }
        const unsigned long stride = target / order_;
        std::vector<Rational> powers(stride * (coeffs_.size() - 1) + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            powers[i * stride] = coeffs_[i];
        }
        return from_powers(target, std::move(powers));
    }

    CycloRational operator-() const
    {
        CycloRational out = *this;
        for (auto& c : out.coeffs_) {
            c = -c;
        }
        return out;
    }

    CycloRational& operator+=(const CycloRational& o) { return combine_additive(o, false); }
    CycloRational& operator-=(const CycloRational& o) { return combine_additive(o, true); }

    CycloRational& operator*=(const CycloRational& o)
    {
        if (o.order_ == 1) {
            return *this *= o.coeffs_[0];
        }
        if (order_ == 1) {
            Rational r = coeffs_[0];
            *this = o;
            return *this *= r;
        }
        const unsigned long m = std::lcm(order_, o.order_);
        const CycloRational a = lift(m);
        const CycloRational b = o.lift(m);
        std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        order_ = m;
        coeffs_ = reduce(m, std::move(prod));
        return *this;
    }

    CycloRational& operator*=(const Rational& r)
    {
        for (auto& c : coeffs_) {
            c *= r;
        }
        return *this;
    }

    CycloRational& operator/=(const CycloRational& o) { return *this *= o.inverse(); }

    friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
    friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
    friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
    friend CycloRational operator*(CycloRational a, const Rational& b) { return a *= b; }
    friend CycloRational operator*(const Rational& a, CycloRational b) { return b *= a; }
    friend CycloRational operator*(CycloRational a, long b) { return a *= Rational(b); }
    friend CycloRational operator*(long a, CycloRational b) { return b *= Rational(a); }
    friend CycloRational operator/(CycloRational a, const CycloRational& b) { return a /= b; }

    friend bool operator==(const CycloRational& a, const CycloRational& b)
    {
        if (a.order_ == b.order_) {
            return a.coeffs_ == b.coeffs_;
        }
        const unsigned long m = std::lcm(a.order_, b.order_);
        return a.lift(m).coeffs_ == b.lift(m).coeffs_;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
    CycloRational inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("CycloRational: division by zero");
        }
        if (is_rational()) {
            return CycloRational(coeffs_[0].inverse()).lift(order_);
        }
        using Poly = std::vector<Rational>;
        const IntPoly& phi = *detail::CyclotomicCache::instance().get(order_);
        Poly r0(phi.begin(), phi.end());
        Poly r1 = coeffs_;
        Poly s0{};
        Poly s1{Rational(1)};
        trim(r1);
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Poly next = sub(s0, mul(q, s1));
            s0 = std::move(s1);
            s1 = std::move(next);
        }
        // Phi_m is irreducible, so the gcd is a nonzero constant.
        const Rational g = r0.at(0);
        for (auto& c : s0) {
            c /= g;
        }
        return from_powers(order_, std::move(s0));
    }

    CycloRational pow(unsigned long e) const
    {
        CycloRational result = CycloRational(1).lift(order_);
        CycloRational base = *this;
        while (e > 0) {
            if (e & 1u) {
                result *= base;
            }
            e >>= 1u;
            if (e > 0) {
                base *= base;
            }
        }
        return result;
    }

    /// "m:[c0,c1,...]" in the power basis.
    std::string str() const
    {
        std::string out = std::to_string(order_) + ":[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i > 0) {
                out += ",";
            }
            out += coeffs_[i].str();
        }
        return out + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloRational& c) { return os << c.str(); }

private:
    static void trim(std::vector<Rational>& p)
    {
        while (!p.empty() && p.back().is_zero()) {
            p.pop_back();
        }
    }

    static std::vector<Rational> sub(std::vector<Rational> a, const std::vector<Rational>& b)
    {
        if (a.size() < b.size()) {
            a.resize(b.size());
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i] -= b[i];
        }
        trim(a);
        return a;
    }

    static std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b)
    {
        if (a.empty() || b.empty()) {
            return {};
        }
        std::vector<Rational> out(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                out[i + j] += a[i] * b[j];
            }
        }
        trim(out);
        return out;
    }

    // b must be trimmed and nonempty.
    static std::pair<std::vector<Rational>, std::vector<Rational>> divmod(std::vector<Rational> a,
                                                                          const std::vector<Rational>& b)
    {
        trim(a);
        if (a.size() < b.size()) {
            return {{}, std::move(a)};
        }
        std::vector<Rational> q(a.size() - b.size() + 1);
        const Rational lead = b.back();
        for (std::size_t i = a.size(); i-- >= b.size();) {
            if (a[i].is_zero()) {
                continue;
            }
            const Rational c = a[i] / lead;
            q[i - b.size() + 1] = c;
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[i - b.size() + 1 + j] -= c * b[j];
            }
        }
        trim(a);
        trim(q);
        return {std::move(q), std::move(a)};
    }

    // Folds exponents mod m, then reduces mod Phi_m. m is not 2 mod 4.
    static std::vector<Rational> reduce(unsigned long m, std::vector<Rational> p)
    {
        if (p.size() > m) {
            for (std::size_t i = m; i < p.size(); ++i) {
                if (!p[i].is_zero()) {
                    p[i % m] += p[i];
                }
            }
            p.resize(m);
        }
        const IntPoly& phi = *detail::CyclotomicCache::instance().get(m);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t i = p.size(); i-- > deg;) {
            if (p[i].is_zero()) {
                continue;
            }
            const Rational c = p[i];
            for (std::size_t j = 0; j < deg; ++j) {
                if (phi[j] != 0) {
                    p[i - deg + j] -= c * Rational(phi[j]);
                }
            }
            p[i] = 0;
        }
        p.resize(deg);
        return p;
    }

    CycloRational& combine_additive(const CycloRational& o, bool negate)
    {
        if (o.order_ != order_) {
            const unsigned long m = std::lcm(order_, o.order_);
            if (m != order_) {
                *this = lift(m);
            }
            if (m != o.order_) {
                return combine_additive(o.lift(m), negate);
            }
        }
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (negate) {
                coeffs_[i] -= o.coeffs_[i];
            } else {
                coeffs_[i] += o.coeffs_[i];
            }
        }
        return *this;
    }

    unsigned long order_;
    std::vector<Rational> coeffs_;
};

/// Minimum p-adic valuation over the power-basis coefficients; infinity iff
/// the value is zero. p must be an odd prime.
inline Valuation padic_valuation(const CycloRational& a, unsigned long p)
{
    if (p % 2 == 0 || !detail::is_prime(p)) {
        throw std::invalid_argument("padic_valuation: p must be an odd prime");
    }
    Valuation best = Valuation::infinity();
    for (const auto& c : a.coeffs()) {
        best = std::min(best, padic_valuation(c, p));
    }
    return best;
}

}  // namespace geuler
