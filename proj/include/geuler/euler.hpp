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
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "geuler/binomial.hpp"
#include "geuler/polynomial.hpp"
#include "geuler/rational.hpp"

namespace geuler {

// Euler numbers here are the coefficients of 2/(e^t + 1), i.e. E_n = E_n(0):
// 1, -1/2, 0, 1/4, 0, -1/2, ... They are not the integer secant numbers.

namespace detail {

// Prefix table E_0..E_n, extended monotonically. Readers only ever see
// fully computed prefixes.
class EulerNumberCache {
public:
    static EulerNumberCache& instance()
    {
        static EulerNumberCache cache;
        return cache;
    }

    std::vector<Rational> prefix(std::size_t max_n)
    {
        {
            std::shared_lock lock(mutex_);
            if (max_n < table_.size()) {
                return {table_.begin(), table_.begin() + static_cast<long>(max_n) + 1};
            }
        }
        std::unique_lock lock(mutex_);
        // 2 E_n + sum_{l<n} C(n,l) E_l = 0 for n >= 1.
        for (std::size_t n = table_.size(); n <= max_n; ++n) {
            const auto& row = PascalTriangle::instance().row(n);
            Rational acc;
            for (std::size_t l = 0; l < n; ++l) {
                if (!table_[l].is_zero()) {
                    acc += Rational(row[l]) * table_[l];
                }
            }
            table_.push_back(acc * Rational(Integer(-1), Integer(2)));
        }
        return {table_.begin(), table_.begin() + static_cast<long>(max_n) + 1};
    }

private:
    EulerNumberCache() : table_{Rational(1)} {}

    std::shared_mutex mutex_;
    std::vector<Rational> table_;
};

}  // namespace detail

/// E_0..E_N from the recurrence sum_{l=0}^{n} C(n,l) E_l + E_n = 0 (n >= 1).
inline std::vector<Rational> euler_numbers(std::size_t max_n)
{
    return detail::EulerNumberCache::instance().prefix(max_n);
}

inline Rational euler_number(std::size_t n) { return euler_numbers(n).back(); }

/// E_n(x) = sum_{l=0}^{n} C(n,l) x^{n-l} E_l, rational coefficients.
inline RationalPoly euler_polynomial_rational(std::size_t n)
{
    const auto e = euler_numbers(n);
    const auto& row = PascalTriangle::instance().row(n);
    std::vector<Rational> c(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        c[n - l] = Rational(row[l]) * e[l];
    }
    return RationalPoly(std::move(c));
}

inline XPoly euler_polynomial(std::size_t n)
{
    return convert_coeffs<CycloRational>(euler_polynomial_rational(n));
}

/// E_n(r), exactly.
inline Rational euler_poly_eval(std::size_t n, const Rational& r) { return euler_polynomial_rational(n)(r); }

}  // namespace geuler
