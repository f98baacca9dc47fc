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

#include <string>

#include "json.hpp"

#include "geuler/cyclotomic.hpp"
#include "geuler/dirichlet.hpp"
#include "geuler/identities.hpp"
#include "geuler/polynomial.hpp"
#include "geuler/power_series.hpp"
#include "geuler/rational.hpp"

namespace geuler {

using json = nlohmann::json;

// Rationals are written as "num/den" strings so that nothing is rounded.

inline void to_json(json& j, const Rational& r) { j = r.str(); }

inline void to_json(json& j, const CycloRational& c)
{
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) {
        coeffs.push_back(r.str());
    }
    j = json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

template <ExactRing T>
void to_json(json& j, const basic_xpoly<T>& p)
{
    j = json::array();
    for (const auto& c : p.coeffs()) {
        j.push_back(c);
    }
}

template <ExactRing T>
void to_json(json& j, const basic_egf<T>& f)
{
    j = json::array();
    for (const auto& c : f.coeffs()) {
        j.push_back(c);
    }
}

inline void to_json(json& j, const Character& chi)
{
    j = json{{"modulus", chi.modulus()},
             {"conductor", conductor(chi)},
             {"order", chi.order()},
             {"index", chi.index()},
             {"label", chi.label()},
             {"values", chi.values()}};
}

inline void to_json(json& j, const ReportParameters& p)
{
    j = json::object();
    auto put = [&j](const char* key, const auto& opt) {
        if (opt) {
            j[key] = *opt;
        }
    };
    put("d", p.modulus);
    put("character", p.character);
    put("primitive", p.primitive);
    put("w1", p.w1);
    put("w2", p.w2);
    put("k", p.k);
    put("n", p.n);
    put("l", p.l);
    put("p", p.p);
    put("N", p.level);
    put("include_x", p.include_x);
    put("form", p.form);
    put("reading", p.reading);
    put("specialization", p.specialization);
    put("f", p.polynomial);
}

inline void to_json(json& j, const VerificationReport& r)
{
    j = json{{"identity", identity_tag(r.id)},
             {"parameters", r.params},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"discrepancy", r.discrepancy},
             {"passed", r.passed}};
}

}  // namespace geuler
