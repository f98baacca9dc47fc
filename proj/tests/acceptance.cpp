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

// Acceptance suite: one PASS/FAIL line per criterion, each timed against its
// runtime bound. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "geuler/geuler.hpp"

namespace {

using namespace geuler;

struct Outcome {
    bool ok = false;
    std::string detail;
};

// Reports the first failing report, if any, and the failure count.
Outcome summarize(const std::vector<VerificationReport>& reports)
{
    std::size_t failed = 0;
    const VerificationReport* first = nullptr;
    for (const auto& r : reports) {
        if (!r.passed) {
            ++failed;
            if (!first) {
                first = &r;
            }
        }
    }
    std::ostringstream os;
    os << reports.size() - failed << "/" << reports.size() << " checks exact";
    if (first) {
        const auto& p = first->params;
        os << "; first failure " << p.character.value_or("?");
        if (p.w1) {
            os << " w1=" << *p.w1 << " w2=" << *p.w2;
        }
        if (p.n) {
            os << " n=" << *p.n;
        }
        if (p.l) {
            os << " l=" << *p.l;
        }
        if (p.form) {
            os << " form=" << *p.form;
        }
        os << " discrepancy=" << first->discrepancy.str();
    }
    return {failed == 0, os.str()};
}

int failures = 0;

void run(int id, const std::string& name, double bound_s, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < bound_s;
    const bool ok = out.ok && in_time;
    failures += ok ? 0 : 1;
    std::printf("[%s] %d %s (%.3fs, bound %.0fs%s): %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs, bound_s,
                in_time ? "" : ", TOO SLOW", out.detail.c_str());
    std::fflush(stdout);
}

void info(const std::string& name, const Outcome& out)
{
    std::printf("[INFO] %s: %s (%s)\n", name.c_str(), out.ok ? "holds" : "fails", out.detail.c_str());
    std::fflush(stdout);
}

Outcome classical_oracle()
{
    constexpr std::size_t N = 16;
    const auto rec = euler_numbers(N);
    const auto denom = egf_exp<Rational>(Rational(1), N + 1) + basic_egf<Rational>::one(N + 1);
    auto two = basic_egf<Rational>(N + 1);
    two += basic_egf<Rational>::one(N + 1);
    two += basic_egf<Rational>::one(N + 1);
    const auto gf = egf_div(two, denom);
    for (std::size_t n = 0; n <= N; ++n) {
        if (!(rec[n] == gf[n])) {
            return {false, "routes differ at n=" + std::to_string(n)};
        }
    }
    const std::vector<Rational> head{Rational(1), Rational(-1, 2) , Rational(0), Rational(1, 4), Rational(0)};
    for (std::size_t n = 0; n < head.size(); ++n) {
        if (!(rec[n] == head[n])) {
            return {false, "E_" + std::to_string(n) + " = " + rec[n].str()};
        }
    }
    return {true, "E_0..E_16 agree by recurrence and EGF division; E_0..E_4 = 1, -1/2, 0, 1/4, 0"};
}

Outcome two_route()
{
    std::size_t count = 0;
    for (unsigned long d : {1UL, 3UL, 5UL, 7UL, 9UL}) {
        for (const auto& chi : enumerate_characters(d)) {
            const auto table = gen_euler_numbers(chi, 12).numbers;
            const auto oracle = gen_euler_gf_oracle(chi, 12);
            for (std::size_t n = 0; n <= 12; ++n) {
                if (!(table[n] == oracle[n])) {
                    return {false, chi.label() + " differs at n=" + std::to_string(n)};
                }
                ++count;
            }
        }
    }
    return {true, std::to_string(count) + " values agree"};
}

Outcome fermionic()
{
    std::size_t count = 0;
    for (unsigned long p : {3UL, 5UL, 7UL}) {
        for (unsigned long d : {1UL, 5UL, 7UL}) {
            if (d % p == 0) {
                continue;
            }
            for (const auto& chi : enumerate_characters(d)) {
                for (std::size_t k = 0; k <= 8; ++k) {
                    const auto poly = gen_euler_poly(chi, k);
                    const auto e = poly(CycloRational(0));
                    unsigned long pn = 1;
                    for (unsigned level = 1; level <= 4; ++level) {
                        pn *= p;
                        const auto s = fermionic_partial_sum(chi, k, p, level, Rational(0));
                        if (padic_valuation(s - e, p) < Valuation(static_cast<long>(level))) {
                            return {false, chi.label() + " p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                               " N=" + std::to_string(level) + " congruence fails"};
                        }
                        if (!(s * 2L == poly(CycloRational(static_cast<long>(d * pn))) + e)) {
                            return {false, chi.label() + " p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                               " N=" + std::to_string(level) + " exact identity fails"};
                        }
                        ++count;
                    }
                }
            }
        }
    }
    return {true, std::to_string(count) + " (chi, p, k, N) cases"};
}

Outcome characters()
{
    std::size_t count = 0;
    for (unsigned long d = 1; d <= 15; d += 2) {
        const auto chars = enumerate_characters(d);
        if (chars.size() != euler_phi(d)) {
            return {false, "d=" + std::to_string(d) + " has " + std::to_string(chars.size()) + " characters"};
        }
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const auto& chi = chars[i];
            for (std::size_t j = 0; j < i; ++j) {
                if (chars[j] == chi) {
                    return {false, chi.label() + " duplicates " + chars[j].label()};
                }
            }
            for (unsigned long a = 0; a < d; ++a) {
                for (unsigned long b = 0; b < d; ++b) {
                    if (!(chi(a * b) == chi(a) * chi(b))) {
                        return {false, chi.label() + " not multiplicative"};
                    }
                }
            }
            CycloRational sum;
            for (unsigned long l = 0; l < d; ++l) {
                sum = sum + chi(l);
            }
            const CycloRational expected(chi.is_trivial() ? static_cast<long>(euler_phi(d)) : 0L);
            if (d > 1 && !(sum == expected)) {
                return {false, chi.label() + " orthogonality sum " + sum.str()};
            }
            ++count;
        }
    }
    // The character mod 9 induced from the quadratic character mod 3.
    const Character quad3 = character(3, 1);
    for (const auto& chi : enumerate_characters(9)) {
        bool induced = true;
        for (unsigned long a = 1; a < 9; ++a) {
            if (a % 3 != 0 && !(chi(a) == quad3(a % 3))) {
                induced = false;
            }
        }
        if (induced) {
            if (conductor(chi) != 3) {
                return {false, "induced character " + chi.label() + " has conductor " + std::to_string(conductor(chi))};
            }
            return {true, std::to_string(count) + " characters for odd d <= 15; " + chi.label() +
                              " induced from mod 3 has conductor 3"};
        }
    }
    return {false, "no character mod 9 is induced from the quadratic character mod 3"};
}

}  // namespace

int main()
{
    run(1, "classical oracle equality", 1, classical_oracle);
    run(2, "two-route generalized equality", 10, two_route);
    run(3, "periodic alternating sum sweep", 10, [] {
        return summarize(sweep_periodic_alternating_sum({1, 3, 5, 7}, CharacterFilter::all, 10, {1, 3, 5}));
    });

    SymmetryGrid grid;
    run(4, "symmetric convolution sweep with x = 0 case", 60, [&] {
        grid.max_degree = 12;
        return summarize(sweep_symmetric_convolution(grid));
    });
    run(5, "symmetric shift-sum sweep (as stated)", 60, [&] {
        grid.max_degree = 10;
        return summarize(sweep_symmetric_shift_sum(grid));
    });
    run(6, "four-expansion coherence at L = 8 (as stated)", 60, [&] {
        grid.max_degree = 8;
        return summarize(sweep_expansion_coherence(grid, printed_expansion_forms()));
    });
    run(7, "fermionic congruence", 30, fermionic);
    run(8, "recurrence property suite", 5, [] { return summarize(sweep_recurrence(RecurrenceGrid{})); });
    run(9, "character-layer properties", 5, characters);

    // Supplementary diagnostics; they do not affect the exit status.
    SymmetryGrid normalized;
    normalized.reading = Reading::normalized;
    normalized.max_degree = 10;
    info("shift-sum sweep, chi(l)-weighted reading", summarize(sweep_symmetric_shift_sum(normalized)));
    normalized.max_degree = 8;
    info("five-form coherence incl. closed form, normalized reading",
         summarize(sweep_expansion_coherence(normalized, all_expansion_forms())));
    SymmetryGrid prim;
    prim.filter = CharacterFilter::primitive;
    prim.max_degree = 12;
    info("symmetric convolution sweep, primitive characters only", summarize(sweep_symmetric_convolution(prim)));
    prim.max_degree = 10;
    info("symmetric shift-sum sweep (as stated), primitive characters only",
         summarize(sweep_symmetric_shift_sum(prim)));
    SymmetryGrid unit;
    unit.moduli = {1};
    unit.max_degree = 10;
    info("symmetric shift-sum sweep (as stated), d = 1 only", summarize(sweep_symmetric_shift_sum(unit)));

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
    return failures == 0 ? 0 : 1;
}
