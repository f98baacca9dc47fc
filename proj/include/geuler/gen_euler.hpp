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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geuler/binomial.hpp"
#include "geuler/dirichlet.hpp"
#include "geuler/euler.hpp"
#include "geuler/polynomial.hpp"
#include "geuler/power_series.hpp"

namespace geuler {

/// Generalized Euler numbers E_{0,chi}..E_{max_n,chi}.
struct GenEulerTable {
    Character character;
    std::size_t max_n = 0;
    std::vector<CycloRational> numbers;
};

namespace detail {

inline Rational sign_of_index(std::uint64_t a) { return Rational(a % 2 == 0 ? 1 : -1); }

// E_{n,chi} = d^n sum_{a<d} (-1)^a chi(a) E_n(a/d), from splitting the
// generating function over residues a and rescaling t -> d t.
inline CycloRational gen_euler_closed_form(const Character& chi, std::size_t n)
{
    const unsigned long d = chi.modulus();
    CycloRational acc;
    for (unsigned long a = 0; a < d; ++a) {
        const CycloRational& c = chi(a);
        if (c.is_zero()) {
            continue;
        }
        const Rational e = euler_poly_eval(n, Rational(Integer(a), Integer(d)));
        acc += c * (sign_of_index(a) * e);
    }
    return acc * Rational(ipow(Integer(d), n));
}

// Keyed by (modulus, enumeration index); tables only grow.
class GenEulerCache {
public:
    static GenEulerCache& instance()
    {
        static GenEulerCache cache;
        return cache;
    }

    std::vector<CycloRational> prefix(const Character& chi, std::size_t max_n)
    {
        const std::pair<unsigned long, std::size_t> key{chi.modulus(), chi.index()};
        std::size_t have = 0;
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) {
                have = it->second.size();
                if (max_n < have) {
                    return {it->second.begin(), it->second.begin() + static_cast<long>(max_n) + 1};
                }
            }
        }
        std::vector<CycloRational> extra;
        for (std::size_t n = have; n <= max_n; ++n) {
            extra.push_back(gen_euler_closed_form(chi, n));
        }
        std::unique_lock lock(mutex_);
        auto& entry = table_[key];
        // Another writer may have extended the entry meanwhile.
        for (std::size_t n = entry.size(); n <= max_n; ++n) {
            entry.push_back(extra[n - have]);
        }
        return {entry.begin(), entry.begin() + static_cast<long>(max_n) + 1};
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<unsigned long, std::size_t>, std::vector<CycloRational>> table_;
};

}  // namespace detail

/// E_{n,chi} for 0 <= n <= max_n through the residue-class reduction to
/// classical Euler polynomials at a/d. Memoized per character.
inline GenEulerTable gen_euler_numbers(const Character& chi, std::size_t max_n)
{
    return GenEulerTable{chi, max_n, detail::GenEulerCache::instance().prefix(chi, max_n)};
}

/// Numerator 2 sum_{l<d} (-1)^l chi(l) e^{lt} of the defining series.
inline TruncatedEGF gen_euler_numerator(const Character& chi, std::size_t order_bound)
{
    TruncatedEGF num(order_bound);
    for (unsigned long l = 0; l < chi.modulus(); ++l) {
        const CycloRational& c = chi(l);
        if (c.is_zero()) {
            continue;
        }
        num += egf_exp(Rational(static_cast<long>(l)), order_bound) * (c * (detail::sign_of_index(l) * Rational(2)));
    }
    return num;
}

/// The defining series 2 sum_{l<d} (-1)^l chi(l) e^{lt} / (e^{dt} + 1), truncated.
inline TruncatedEGF gen_euler_series(const Character& chi, std::size_t order_bound)
{
    const TruncatedEGF den =
        egf_exp(Rational(static_cast<long>(chi.modulus())), order_bound) + TruncatedEGF::one(order_bound);
    return egf_div(gen_euler_numerator(chi, order_bound), den);
}

/// E_{0,chi}..E_{max_n,chi} read off the generating function by series division.
inline std::vector<CycloRational> gen_euler_gf_oracle(const Character& chi, std::size_t max_n)
{
    return gen_euler_series(chi, max_n).coeffs();
}

/// E_{n,chi}(x) = sum_i C(n,i) E_{i,chi} x^{n-i}.
inline XPoly gen_euler_poly(const Character& chi, std::size_t n)
{
    const auto e = gen_euler_numbers(chi, n).numbers;
    const auto& row = PascalTriangle::instance().row(n);
    std::vector<CycloRational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[n - i] = e[i] * Rational(row[i]);
    }
    return XPoly(std::move(c));
}

namespace detail {

// sums[a][j] = sum_{0<=y<=last, y = a mod d} (-1)^y y^j, with 0^0 = 1.
inline std::vector<std::vector<Integer>> signed_power_sums_by_residue(unsigned long d, std::uint64_t last,
                                                                       std::size_t max_k)
{
    std::vector<std::vector<Integer>> sums(d, std::vector<Integer>(max_k + 1));
    Integer pw;
    for (std::uint64_t y = 0; y <= last; ++y) {
        auto& row = sums[y % d];
        const bool odd = y % 2 == 1;
        pw = 1;
        const Integer yy(static_cast<unsigned long>(y));
        for (std::size_t j = 0; j <= max_k; ++j) {
            if (odd) {
                row[j] -= pw;
            } else {
                row[j] += pw;
            }
            pw *= yy;
        }
        if (y == std::numeric_limits<std::uint64_t>::max()) {
            break;
        }
    }
    return sums;
}

}  // namespace detail

/// T_{k,chi}(n) = 2 sum_{l=0}^{n} (-1)^l chi(l) l^k, with 0^0 = 1.
inline CycloRational alternating_power_sum(const Character& chi, std::size_t k, std::uint64_t n)
{
    const unsigned long d = chi.modulus();
    const auto sums = detail::signed_power_sums_by_residue(d, n, k);
    CycloRational acc;
    for (unsigned long a = 0; a < d; ++a) {
        if (!chi(a).is_zero() && sums[a][k] != 0) {
            acc += chi(a) * Rational(sums[a][k]);
        }
    }
    return acc * Rational(2);
}

/// T_{k,chi}(n) for every 0 <= k <= max_k, sharing one pass over l.
inline std::vector<CycloRational> alternating_power_sums(const Character& chi, std::size_t max_k, std::uint64_t n)
{
    const unsigned long d = chi.modulus();
    const auto sums = detail::signed_power_sums_by_residue(d, n, max_k);
    std::vector<CycloRational> out(max_k + 1);
    for (std::size_t k = 0; k <= max_k; ++k) {
        for (unsigned long a = 0; a < d; ++a) {
            if (!chi(a).is_zero() && sums[a][k] != 0) {
                out[k] += chi(a) * Rational(sums[a][k]);
            }
        }
        out[k] *= Rational(2);
    }
    return out;
}

/// S_N = sum_{y=0}^{d p^N - 1} chi(y) (x + y)^k (-1)^y, the level-N Riemann
/// sum of the fermionic integral of chi(y)(x+y)^k over X = lim Z/dp^N Z.
/// (x + y)^k is expanded binomially, so S_N is exact for rational x.
inline CycloRational fermionic_partial_sum(const Character& chi, std::size_t k, unsigned long p, unsigned level,
                                           const Rational& x)
{
    const unsigned long d = chi.modulus();
    if (p % 2 == 0 || !detail::is_prime(p)) {
        throw std::invalid_argument("fermionic_partial_sum: p must be an odd prime");
    }
    if (d % p == 0) {
        throw std::invalid_argument("fermionic_partial_sum: p must not divide the modulus");
    }
    if (level == 0) {
        throw std::invalid_argument("fermionic_partial_sum: level N must be positive");
    }
    std::uint64_t count = d;
    for (unsigned i = 0; i < level; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / p) {
            throw std::overflow_error("fermionic_partial_sum: d p^N too large");
        }
        count *= p;
    }
    const auto sums = detail::signed_power_sums_by_residue(d, count - 1, k);
    const auto& row = PascalTriangle::instance().row(k);
    CycloRational acc;
    for (std::size_t j = 0; j <= k; ++j) {
        CycloRational inner;
        for (unsigned long a = 0; a < d; ++a) {
            if (!chi(a).is_zero() && sums[a][j] != 0) {
                inner += chi(a) * Rational(sums[a][j]);
            }
        }
        if (!inner.is_zero()) {
            acc += inner * (Rational(row[j]) * x.pow(k - j));
        }
    }
    return acc;
}

}  // namespace geuler
