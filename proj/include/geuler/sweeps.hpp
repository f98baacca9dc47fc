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
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "geuler/dirichlet.hpp"
#include "geuler/identities.hpp"
#include "geuler/parallel.hpp"

namespace geuler {

enum class CharacterFilter { all, primitive };

/// Characters mod d, optionally restricted to primitive ones or to one
/// enumeration index.
inline std::vector<Character> select_characters(unsigned long d, CharacterFilter filter,
                                                std::optional<std::size_t> index = std::nullopt)
{
    std::vector<Character> out;
    for (auto& chi : enumerate_characters(d)) {
        if (index && chi.index() != *index) {
            continue;
        }
        if (filter == CharacterFilter::primitive && !is_primitive(chi)) {
            continue;
        }
        out.push_back(std::move(chi));
    }
    if (index && out.empty() && *index >= euler_phi(d)) {
        throw std::out_of_range("character index " + std::to_string(*index) + " out of range for modulus " +
                                std::to_string(d));
    }
    return out;
}

inline std::vector<Character> select_characters(const std::vector<unsigned long>& moduli, CharacterFilter filter,
                                                std::optional<std::size_t> index = std::nullopt)
{
    std::vector<Character> out;
    for (unsigned long d : moduli) {
        auto part = select_characters(d, filter, index);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct SymmetryGrid {
    std::vector<unsigned long> moduli{1, 3, 5, 7, 9};
    CharacterFilter filter = CharacterFilter::all;
    std::optional<std::size_t> character_index;
    std::vector<unsigned long> w1s{1, 3, 5};
    std::vector<unsigned long> w2s{1, 3, 5};
    std::size_t max_degree = 12;
    Reading reading = Reading::literal;
    unsigned threads = 0;
};

namespace detail {

struct GridPoint {
    const Character* chi;
    unsigned long w1;
    unsigned long w2;
};

inline std::vector<GridPoint> grid_points(const std::vector<Character>& chars, const SymmetryGrid& grid)
{
    for (auto w : grid.w1s) {
        if (w % 2 == 0) {
            throw std::invalid_argument("w1 values must be odd");
        }
    }
    for (auto w : grid.w2s) {
        if (w % 2 == 0) {
            throw std::invalid_argument("w2 values must be odd");
        }
    }
    std::vector<GridPoint> pts;
    for (const auto& chi : chars) {
        for (auto w1 : grid.w1s) {
            for (auto w2 : grid.w2s) {
                pts.push_back({&chi, w1, w2});
            }
        }
    }
    return pts;
}

template <class Fn>
std::vector<VerificationReport> run_grid(const SymmetryGrid& grid, Fn per_point)
{
    const auto chars = select_characters(grid.moduli, grid.filter, grid.character_index);
    const auto pts = grid_points(chars, grid);
    auto nested = parallel_map(pts.size(), [&](std::size_t i) { return per_point(pts[i]); }, grid.threads);
    std::vector<VerificationReport> out;
    for (auto& v : nested) {
        for (auto& r : v) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace detail

/// Convolution symmetry for l <= max_degree, with x kept symbolic and
/// (when with_x_zero) also at x = 0.
inline std::vector<VerificationReport> sweep_symmetric_convolution(const SymmetryGrid& grid, bool with_x_zero = true)
{
    return detail::run_grid(grid, [&](const detail::GridPoint& pt) {
        std::vector<VerificationReport> out;
        for (std::size_t l = 0; l <= grid.max_degree; ++l) {
            out.push_back(check_symmetric_convolution(*pt.chi, pt.w1, pt.w2, l, true));
            if (with_x_zero) {
                out.push_back(check_symmetric_convolution(*pt.chi, pt.w1, pt.w2, l, false));
            }
        }
        return out;
    });
}

inline std::vector<VerificationReport> sweep_symmetric_shift_sum(const SymmetryGrid& grid)
{
    return detail::run_grid(grid, [&](const detail::GridPoint& pt) {
        std::vector<VerificationReport> out;
        for (std::size_t n = 0; n <= grid.max_degree; ++n) {
            out.push_back(check_symmetric_shift_sum(*pt.chi, pt.w1, pt.w2, n, grid.reading));
        }
        return out;
    });
}

inline const std::vector<ExpansionForm>& printed_expansion_forms()
{
    static const std::vector<ExpansionForm> forms{ExpansionForm::convolution_w1, ExpansionForm::convolution_w2,
                                                  ExpansionForm::shifted_w1, ExpansionForm::shifted_w2};
    return forms;
}

inline const std::vector<ExpansionForm>& all_expansion_forms()
{
    static const std::vector<ExpansionForm> forms{ExpansionForm::closed_form, ExpansionForm::convolution_w1,
                                                  ExpansionForm::convolution_w2, ExpansionForm::shifted_w1,
                                                  ExpansionForm::shifted_w2};
    return forms;
}

inline std::vector<VerificationReport> sweep_expansion_coherence(const SymmetryGrid& grid,
                                                                 const std::vector<ExpansionForm>& forms)
{
    return detail::run_grid(grid, [&](const detail::GridPoint& pt) {
        return check_expansion_coherence(*pt.chi, pt.w1, pt.w2, grid.max_degree, forms, grid.reading);
    });
}

inline std::vector<VerificationReport> sweep_periodic_alternating_sum(const std::vector<unsigned long>& moduli,
                                                                      CharacterFilter filter, std::size_t max_k,
                                                                      const std::vector<unsigned long>& ns,
                                                                      std::optional<std::size_t> index = std::nullopt,
                                                                      unsigned threads = 0)
{
    for (auto n : ns) {
        if (n % 2 == 0) {
            throw std::invalid_argument("n values must be odd");
        }
    }
    const auto chars = select_characters(moduli, filter, index);
    auto nested = parallel_map(
        chars.size(),
        [&](std::size_t i) {
            std::vector<VerificationReport> out;
            for (auto n : ns) {
                for (std::size_t k = 0; k <= max_k; ++k) {
                    out.push_back(check_periodic_alternating_sum(chars[i], k, n));
                }
            }
            return out;
        },
        threads);
    std::vector<VerificationReport> out;
    for (auto& v : nested) {
        for (auto& r : v) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// Random rational polynomial of degree <= max_degree with numerators in
/// [-max_height, max_height] and denominators in [1, max_height].
inline RationalPoly random_rational_poly(std::mt19937_64& rng, std::size_t max_degree, long max_height)
{
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-max_height, max_height);
    std::uniform_int_distribution<long> den(1, max_height);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) {
        x = Rational(Integer(num(rng)), Integer(den(rng)));
    }
    return RationalPoly(std::move(c));
}

struct RecurrenceGrid {
    std::size_t count = 50;
    std::uint64_t seed = 20260101;
    std::size_t max_degree = 8;
    long max_height = 100;
    unsigned max_n = 6;
};

inline std::vector<VerificationReport> sweep_recurrence(const RecurrenceGrid& grid)
{
    std::mt19937_64 rng(grid.seed);
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < grid.count; ++i) {
        const RationalPoly f = random_rational_poly(rng, grid.max_degree, grid.max_height);
        for (unsigned n = 1; n <= grid.max_n; ++n) {
            out.push_back(check_recurrence(f, n));
        }
    }
    return out;
}

inline bool all_passed(const std::vector<VerificationReport>& reports)
{
    for (const auto& r : reports) {
        if (!r.passed) {
            return false;
        }
    }
    return true;
}

}  // namespace geuler
