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
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geuler/cyclotomic.hpp"

namespace geuler {

/// Cyclic decomposition of (Z/dZ)^x: one generator per odd prime power
/// dividing d, lifted by CRT (it is 1 modulo the other prime powers).
struct UnitGroup {
    unsigned long modulus = 1;
    std::vector<unsigned long> generators;
    std::vector<unsigned long> orders;

    unsigned long size() const
    {
        return std::accumulate(orders.begin(), orders.end(), 1ul, std::multiplies<>());
    }

    /// lcm of the generator orders.
    unsigned long exponent() const
    {
        return std::accumulate(orders.begin(), orders.end(), 1ul,
                               [](unsigned long a, unsigned long b) { return std::lcm(a, b); });
    }
};

namespace detail {

inline std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n)
{
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

inline unsigned long mulmod(unsigned long a, unsigned long b, unsigned long n)
{
    return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % n);
}

/// Order of a in (Z/nZ)^x by exhaustion; a must be a unit.
inline unsigned long multiplicative_order(unsigned long a, unsigned long n)
{
    if (n == 1) {
        return 1;
    }
    a %= n;
    unsigned long x = a;
    unsigned long k = 1;
    while (x != 1) {
        x = mulmod(x, a, n);
        ++k;
        if (k > n) {
            throw std::invalid_argument("multiplicative_order: not a unit");
        }
    }
    return k;
}

inline void require_odd_modulus(unsigned long d)
{
    if (d == 0 || d % 2 == 0) {
        throw std::invalid_argument("modulus must be an odd positive integer, got " + std::to_string(d));
    }
}

}  // namespace detail

inline UnitGroup unit_group_structure(unsigned long d)
{
    detail::require_odd_modulus(d);
    UnitGroup g;
    g.modulus = d;
    for (auto [p, e] : detail::factorize(d)) {
        unsigned long q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= p;
        }
        const unsigned long phi = q - q / p;
        unsigned long root = 0;
        for (unsigned long cand = 2; cand < q; ++cand) {
            if (cand % p != 0 && detail::multiplicative_order(cand, q) == phi) {
                root = cand;
                break;
            }
        }
        if (root == 0) {
            throw std::logic_error("unit_group_structure: no primitive root found");
        }
        const unsigned long rest = d / q;
        unsigned long lifted = root;
        for (unsigned long t = 0; t < q; ++t) {
            const unsigned long x = 1 + rest * t;
            if (x % q == root) {
                lifted = x % d;
                break;
            }
        }
        g.generators.push_back(lifted);
        g.orders.push_back(phi);
    }
    return g;
}

/// A Dirichlet character of odd modulus, stored as its full value table.
/// Values live in the smallest cyclotomic field containing them; zero off
/// the units. For modulus 1 the single character is constantly 1, which
/// includes chi(0) = 1.
class Character {
public:
    unsigned long modulus() const { return modulus_; }

    /// Multiplicative order of chi.
    unsigned long order() const { return order_; }

    /// Position in the lexicographic enumeration of exponent vectors.
    std::size_t index() const { return index_; }

    /// chi(g_i) = zeta^(exponents[i] * exponent/orders[i]) for the canonical generators.
    const std::vector<unsigned long>& exponents() const { return exponents_; }

    const std::vector<CycloRational>& values() const { return values_; }

    bool is_trivial() const { return order_ == 1; }

    const CycloRational& operator()(std::uint64_t l) const { return values_[l % modulus_]; }

    std::string label() const
    {
        std::string out = "d" + std::to_string(modulus_) + "#" + std::to_string(index_) + "(";
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            out += (i > 0 ? "," : "") + std::to_string(exponents_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Character& a, const Character& b)
    {
        return a.modulus_ == b.modulus_ && a.values_ == b.values_;
    }

private:
    friend std::vector<Character> enumerate_characters(unsigned long d);

    unsigned long modulus_ = 1;
    unsigned long order_ = 1;
    std::size_t index_ = 0;
    std::vector<unsigned long> exponents_;
    std::vector<CycloRational> values_;
};

/// All phi(d) characters mod d, in lexicographic order of exponent vectors.
inline std::vector<Character> enumerate_characters(unsigned long d)
{
    const UnitGroup group = unit_group_structure(d);
    const std::size_t rank = group.generators.size();
    const unsigned long m = group.exponent();

    // Residue and exponent-vector pairs for every unit.
    std::vector<std::pair<unsigned long, std::vector<unsigned long>>> units;
    {
        std::vector<unsigned long> k(rank, 0);
        while (true) {
            unsigned long r = 1 % d;
            for (std::size_t i = 0; i < rank; ++i) {
                for (unsigned long j = 0; j < k[i]; ++j) {
                    r = detail::mulmod(r, group.generators[i], d);
                }
            }
            units.emplace_back(r, k);
            std::size_t i = rank;
            while (i > 0 && ++k[i - 1] == group.orders[i - 1]) {
                k[i - 1] = 0;
                --i;
            }
            if (i == 0) {
                break;
            }
        }
    }

    std::vector<Character> out;
    std::vector<unsigned long> e(rank, 0);
    while (true) {
        Character chi;
        chi.modulus_ = d;
        chi.index_ = out.size();
        chi.exponents_ = e;
        unsigned long ord = 1;
        for (std::size_t i = 0; i < rank; ++i) {
            ord = std::lcm(ord, group.orders[i] / std::gcd(e[i], group.orders[i]));
        }
        chi.order_ = ord;
        if (d == 1) {
            chi.values_ = {CycloRational(1)};
        } else {
            chi.values_.assign(d, CycloRational(0));
            for (const auto& [residue, k] : units) {
                unsigned long j = 0;
                for (std::size_t i = 0; i < rank; ++i) {
                    j = (j + e[i] * k[i] % m * (m / group.orders[i])) % m;
                }
                // j is a multiple of m/ord, so the value is a power of zeta_ord.
                chi.values_[residue] = CycloRational::zeta(ord, j / (m / ord));
            }
        }
        out.push_back(std::move(chi));
        std::size_t i = rank;
        while (i > 0 && ++e[i - 1] == group.orders[i - 1]) {
            e[i - 1] = 0;
            --i;
        }
        if (i == 0) {
            break;
        }
    }
    return out;
}

/// The character at position index in enumerate_characters(d).
inline Character character(unsigned long d, std::size_t index)
{
    auto all = enumerate_characters(d);
    if (index >= all.size()) {
        throw std::out_of_range("character index " + std::to_string(index) + " out of range for modulus " +
                                std::to_string(d));
    }
    return all[index];
}

/// chi(l mod d).
inline CycloRational chi_eval(const Character& chi, std::uint64_t l) { return chi(l); }

/// Smallest f | d such that chi(a) = 1 for every unit a = 1 (mod f).
inline unsigned long conductor(const Character& chi)
{
    const unsigned long d = chi.modulus();
    const CycloRational one(1);
    for (unsigned long f : detail::divisors(d)) {
        bool induced = true;
        for (unsigned long a = 1 % f; a < d && induced; a += f) {
            if (std::gcd(a, d) == 1 && !(chi(a) == one)) {
                induced = false;
            }
        }
        if (induced) {
            return f;
        }
    }
    return d;
}

inline bool is_primitive(const Character& chi) { return conductor(chi) == chi.modulus(); }

inline std::vector<Character> primitive_characters(unsigned long d)
{
    std::vector<Character> out;
    for (auto& chi : enumerate_characters(d)) {
        if (is_primitive(chi)) {
            out.push_back(std::move(chi));
        }
    }
    return out;
}

}  // namespace geuler
