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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geuler/dirichlet.hpp"
#include "geuler/euler.hpp"
#include "geuler/gen_euler.hpp"
#include "geuler/polynomial.hpp"
#include "geuler/power_series.hpp"

namespace geuler {

enum class IdentityId {
    shift_recurrence,         // I(f(x+n)) + (-1)^{n-1} I(f) = 2 sum (-1)^{n-1-l} f(l)
    periodic_alternating_sum, // E_{k,chi}(nd) + E_{k,chi} = T_{k,chi}(nd-1), n odd
    symmetric_convolution,    // convolution forms in (w1, w2) agree
    symmetric_shift_sum,      // shifted-argument sums in (w1, w2) agree
    expansion_coherence,      // every expansion of the symmetric series agrees
};

/// Tag used by the CLI and in serialized reports.
inline std::string identity_tag(IdentityId id)
{
    switch (id) {
    case IdentityId::shift_recurrence:
        return "recurrence";
    case IdentityId::periodic_alternating_sum:
        return "eq13";
    case IdentityId::symmetric_convolution:
        return "theorem1";
    case IdentityId::symmetric_shift_sum:
        return "theorem2";
    case IdentityId::expansion_coherence:
        return "tchi-all";
    }
    return "unknown";
}

/// How the printed symmetric expansions are normalized.
///
/// literal: the convolution forms and shifted sums exactly as written.
/// normalized: convolution forms halved and shifted sums weighted by chi(j),
/// which makes every form equal to the coefficients of the closed-form series
/// 2 (e^{d w1 w2 t} + 1) e^{w1 w2 x t} A(w1 t) A(w2 t) / ((e^{d w1 t} + 1)(e^{d w2 t} + 1)),
/// A(s) = sum_{a<d} chi(a) (-1)^a e^{a s}.
enum class Reading { literal, normalized };

inline std::string reading_tag(Reading r) { return r == Reading::literal ? "literal" : "normalized"; }

enum class ExpansionForm {
    convolution_w1, // sum_i C(l,i) E_{i,chi}(w2 x) T_{l-i,chi}(d w1 - 1) w1^i w2^{l-i}
    convolution_w2, // same with w1 and w2 exchanged
    shifted_w1,     // w1^l sum_{j<d w1} (-1)^j E_{l,chi}(w2 x + (w2/w1) j)
    shifted_w2,     // same with w1 and w2 exchanged
    closed_form,    // coefficients of the closed-form series
};

inline std::string form_tag(ExpansionForm f)
{
    switch (f) {
    case ExpansionForm::convolution_w1:
        return "conv-w1";
    case ExpansionForm::convolution_w2:
        return "conv-w2";
    case ExpansionForm::shifted_w1:
        return "shift-w1";
    case ExpansionForm::shifted_w2:
        return "shift-w2";
    case ExpansionForm::closed_form:
        return "closed";
    }
    return "unknown";
}

struct ReportParameters {
    std::optional<unsigned long> modulus;
    std::optional<std::string> character;
    std::optional<bool> primitive;
    std::optional<unsigned long> w1;
    std::optional<unsigned long> w2;
    std::optional<std::size_t> k;
    std::optional<std::size_t> n;
    std::optional<std::size_t> l;
    std::optional<unsigned long> p;
    std::optional<unsigned> level;
    std::optional<bool> include_x;
    std::optional<std::string> form;
    std::optional<std::string> reading;
    std::optional<std::string> specialization;
    std::optional<std::string> polynomial;
};

/// Outcome of one exact identity check. passed iff discrepancy == lhs - rhs
/// is the zero polynomial.
struct VerificationReport {
    IdentityId id{};
    ReportParameters params;
    XPoly lhs;
    XPoly rhs;
    XPoly discrepancy;
    bool passed = false;
};

inline VerificationReport make_report(IdentityId id, ReportParameters params, XPoly lhs, XPoly rhs)
{
    VerificationReport r;
    r.id = id;
    r.params = std::move(params);
    r.discrepancy = lhs - rhs;
    r.passed = r.discrepancy.is_zero();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

inline ReportParameters character_parameters(const Character& chi)
{
    ReportParameters p;
    p.modulus = chi.modulus();
    p.character = chi.label();
    p.primitive = is_primitive(chi);
    return p;
}

/// Fermionic integral over Z_p of a polynomial: sum_k f_k E_k.
template <ExactRing T>
T integral_of_poly(const basic_xpoly<T>& f)
{
    if (f.is_zero()) {
        return T(Rational(0));
    }
    const auto e = euler_numbers(f.size() - 1);
    T acc = T(Rational(0));
    for (std::size_t k = 0; k < f.size(); ++k) {
        acc = acc + f.coeffs()[k] * e[k];
    }
    return acc;
}

/// I(f_n) + (-1)^{n-1} I(f) = 2 sum_{l=0}^{n-1} (-1)^{n-1-l} f(l), f_n(x) = f(x+n).
/// For even n the identity is read with the stray q^n factor set to 1.
inline VerificationReport check_recurrence(const RationalPoly& f, unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("check_recurrence: n must be positive");
    }
    const RationalPoly shifted = poly_compose_affine(f, Rational(1), Rational(static_cast<long>(n)));
    const Rational sign_f = (n - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational lhs = integral_of_poly(shifted) + sign_f * integral_of_poly(f);
    Rational rhs;
    for (unsigned l = 0; l < n; ++l) {
        const Rational term = f(Rational(static_cast<long>(l)));
        rhs += (n - 1 - l) % 2 == 0 ? term : -term;
    }
    rhs *= Rational(2);

    ReportParameters params;
    params.n = n;
    params.specialization = n == 1 ? "unit_shift" : (n % 2 == 1 ? "odd_shift" : "even_shift_q1");
    params.polynomial = f.str();
    return make_report(IdentityId::shift_recurrence, std::move(params), XPoly(CycloRational(lhs)),
                       XPoly(CycloRational(rhs)));
}

/// E_{k,chi}(nd) + E_{k,chi} = T_{k,chi}(nd - 1) for odd n.
inline VerificationReport check_periodic_alternating_sum(const Character& chi, std::size_t k, unsigned long n)
{
    if (n % 2 == 0) {
        throw std::invalid_argument("check_periodic_alternating_sum: n must be odd");
    }
    const unsigned long nd = n * chi.modulus();
    const XPoly e = gen_euler_poly(chi, k);
    const CycloRational lhs = e(CycloRational(Rational(static_cast<long>(nd)))) + e.coeff(0);
    const CycloRational rhs = alternating_power_sum(chi, k, nd - 1);

    ReportParameters params = character_parameters(chi);
    params.k = k;
    params.n = n;
    return make_report(IdentityId::periodic_alternating_sum, std::move(params), XPoly(lhs), XPoly(rhs));
}

namespace detail {

inline void require_odd_weights(unsigned long w1, unsigned long w2)
{
    if (w1 % 2 == 0 || w2 % 2 == 0) {
        throw std::invalid_argument("w1 and w2 must be odd positive integers");
    }
}

// E_{i,chi}(b x) for i <= L.
inline std::vector<XPoly> scaled_gen_euler_polys(const Character& chi, unsigned long b, std::size_t L)
{
    std::vector<XPoly> out;
    out.reserve(L + 1);
    for (std::size_t i = 0; i <= L; ++i) {
        out.push_back(poly_compose_affine(gen_euler_poly(chi, i), Rational(static_cast<long>(b)), Rational(0)));
    }
    return out;
}

// sum_i C(l,i) E_{i,chi}(b x) T_{l-i,chi}(d a - 1) a^i b^{l-i}, l <= L.
inline std::vector<XPoly> convolution_terms(const Character& chi, unsigned long a, unsigned long b, std::size_t L)
{
    const auto e = scaled_gen_euler_polys(chi, b, L);
    const auto t = alternating_power_sums(chi, L, chi.modulus() * a - 1);
    std::vector<XPoly> out;
    out.reserve(L + 1);
    for (std::size_t l = 0; l <= L; ++l) {
        const auto& row = PascalTriangle::instance().row(l);
        XPoly term;
        for (std::size_t i = 0; i <= l; ++i) {
            const Rational scale = Rational(row[i]) * Rational(ipow(Integer(a), i)) * Rational(ipow(Integer(b), l - i));
            term += e[i] * XPoly(t[l - i] * scale);
        }
        out.push_back(std::move(term));
    }
    return out;
}

// a^l sum_{j<d a} (-1)^j [chi(j)] E_{l,chi}(b x + (b/a) j), l <= L.
inline std::vector<XPoly> shifted_terms(const Character& chi, unsigned long a, unsigned long b, std::size_t L,
                                        bool weight_by_character)
{
    const unsigned long count = chi.modulus() * a;
    std::vector<XPoly> out;
    out.reserve(L + 1);
    for (std::size_t l = 0; l <= L; ++l) {
        const XPoly e = gen_euler_poly(chi, l);
        XPoly sum;
        for (unsigned long j = 0; j < count; ++j) {
            CycloRational weight = sign_of_index(j);
            if (weight_by_character) {
                weight *= chi(j);
                if (weight.is_zero()) {
                    continue;
                }
            }
            const Rational shift(Integer(b * j), Integer(a));
            sum += poly_compose_affine(e, Rational(static_cast<long>(b)), shift) * XPoly(weight);
        }
        out.push_back(sum * Rational(ipow(Integer(a), l)));
    }
    return out;
}

// A(w t) = sum_{c<d} chi(c) (-1)^c e^{c w t}.
inline TruncatedEGF character_exponential_sum(const Character& chi, unsigned long w, std::size_t L)
{
    TruncatedEGF out(L);
    for (unsigned long c = 0; c < chi.modulus(); ++c) {
        if (chi(c).is_zero()) {
            continue;
        }
        out += egf_exp(Rational(static_cast<long>(c * w)), L) * (chi(c) * sign_of_index(c));
    }
    return out;
}

inline std::vector<XPoly> closed_form_terms(const Character& chi, unsigned long w1, unsigned long w2, std::size_t L)
{
    const unsigned long d = chi.modulus();
    auto one = TruncatedEGF::one(L);
    const TruncatedEGF num = egf_mul(egf_mul(egf_exp(Rational(static_cast<long>(d * w1 * w2)), L) + one,
                                             character_exponential_sum(chi, w1, L)),
                                     character_exponential_sum(chi, w2, L)) *
                             CycloRational(2);
    const TruncatedEGF den = egf_mul(egf_exp(Rational(static_cast<long>(d * w1)), L) + one,
                                     egf_exp(Rational(static_cast<long>(d * w2)), L) + one);
    const TruncatedEGF g = egf_div(num, den);
    // Multiply by e^{w1 w2 x t}, whose coefficients are (w1 w2 x)^n.
    const XPoly wx = XPoly::monomial(CycloRational(Rational(static_cast<long>(w1 * w2))), 1);
    const basic_egf<XPoly> ex = egf_exp(wx, L);
    return egf_mul(convert_coeffs<XPoly>(g), ex).coeffs();
}

}  // namespace detail

/// Coefficients of t^l/l!, l <= L, of one expansion of the symmetric series,
/// each a polynomial in x.
inline std::vector<XPoly> t_chi_expansion(const Character& chi, unsigned long w1, unsigned long w2,
                                          ExpansionForm form, std::size_t L, Reading reading = Reading::literal)
{
    detail::require_odd_weights(w1, w2);
    const bool normalized = reading == Reading::normalized;
    std::vector<XPoly> terms;
    switch (form) {
    case ExpansionForm::convolution_w1:
        terms = detail::convolution_terms(chi, w1, w2, L);
        break;
    case ExpansionForm::convolution_w2:
        terms = detail::convolution_terms(chi, w2, w1, L);
        break;
    case ExpansionForm::shifted_w1:
        return detail::shifted_terms(chi, w1, w2, L, normalized);
    case ExpansionForm::shifted_w2:
        return detail::shifted_terms(chi, w2, w1, L, normalized);
    case ExpansionForm::closed_form:
        return detail::closed_form_terms(chi, w1, w2, L);
    }
    if (normalized) {
        for (auto& t : terms) {
            t *= Rational(Integer(1), Integer(2));
        }
    }
    return terms;
}

/// Symmetric convolution identity at order l: the w1-convolution equals the
/// w2-convolution as polynomials in x, or at x = 0 when include_x is false.
inline VerificationReport check_symmetric_convolution(const Character& chi, unsigned long w1, unsigned long w2,
                                                      std::size_t l, bool include_x)
{
    detail::require_odd_weights(w1, w2);
    XPoly lhs = detail::convolution_terms(chi, w1, w2, l).back();
    XPoly rhs = detail::convolution_terms(chi, w2, w1, l).back();
    if (!include_x) {
        lhs = XPoly(lhs.coeff(0));
        rhs = XPoly(rhs.coeff(0));
    }
    ReportParameters params = character_parameters(chi);
    params.w1 = w1;
    params.w2 = w2;
    params.l = l;
    params.include_x = include_x;
    return make_report(IdentityId::symmetric_convolution, std::move(params), std::move(lhs), std::move(rhs));
}

/// Symmetric shifted-sum identity at degree n:
/// w1^n sum_{l<d w1} (-1)^l [chi(l)] E_{n,chi}(w2 x + (w2/w1) l) = (w1 <-> w2).
/// The chi(l) weight is present only under Reading::normalized.
inline VerificationReport check_symmetric_shift_sum(const Character& chi, unsigned long w1, unsigned long w2,
                                                    std::size_t n, Reading reading = Reading::literal)
{
    detail::require_odd_weights(w1, w2);
    const bool weighted = reading == Reading::normalized;
    XPoly lhs = detail::shifted_terms(chi, w1, w2, n, weighted).back();
    XPoly rhs = detail::shifted_terms(chi, w2, w1, n, weighted).back();
    ReportParameters params = character_parameters(chi);
    params.w1 = w1;
    params.w2 = w2;
    params.n = n;
    params.reading = reading_tag(reading);
    return make_report(IdentityId::symmetric_shift_sum, std::move(params), std::move(lhs), std::move(rhs));
}

/// Compares each listed form against the first one, term by term, l <= L.
inline std::vector<VerificationReport> check_expansion_coherence(const Character& chi, unsigned long w1,
                                                                 unsigned long w2, std::size_t L,
                                                                 const std::vector<ExpansionForm>& forms,
                                                                 Reading reading = Reading::literal)
{
    if (forms.size() < 2) {
        throw std::invalid_argument("check_expansion_coherence: need at least two forms");
    }
    std::vector<std::vector<XPoly>> terms;
    for (auto f : forms) {
        terms.push_back(t_chi_expansion(chi, w1, w2, f, L, reading));
    }
    std::vector<VerificationReport> out;
    for (std::size_t f = 1; f < forms.size(); ++f) {
        for (std::size_t l = 0; l <= L; ++l) {
            ReportParameters params = character_parameters(chi);
            params.w1 = w1;
            params.w2 = w2;
            params.l = l;
            params.form = form_tag(forms[0]) + "~" + form_tag(forms[f]);
            params.reading = reading_tag(reading);
            out.push_back(make_report(IdentityId::expansion_coherence, std::move(params), terms[0][l], terms[f][l]));
        }
    }
    return out;
}

}  // namespace geuler
