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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geuler/geuler.hpp"
#include "geuler/serialize.hpp"

namespace {

using geuler::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct RunConfig {
    Format format = Format::json;
    std::string output;
    unsigned threads = 0;

    std::size_t max = geuler::default_truncation;
    std::vector<unsigned long> moduli;
    std::string chars = "all";
    std::optional<std::size_t> char_index;

    std::size_t k = 0;
    std::uint64_t n = 0;
    unsigned long p = 3;
    unsigned level = 1;
    std::string x = "0";

    std::string identity;
    std::vector<unsigned long> w1s{1, 3, 5};
    std::vector<unsigned long> w2s{1, 3, 5};
    std::vector<unsigned long> ns{1, 3, 5};
    std::size_t max_l = 12;
    std::size_t max_n = 12;
    std::size_t max_k = 10;
    std::string reading = "literal";
    bool include_closed = false;
    std::size_t count = 50;
    std::uint64_t seed = 20260101;
    std::size_t max_degree = 8;
};

std::size_t truncation_default()
{
    if (const char* env = std::getenv("GEULER_TRUNCATION")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw UsageError(std::string("GEULER_TRUNCATION is not a nonnegative integer: ") + env);
        }
    }
    return geuler::default_truncation;
}

// A CycloRational serializes as {"coeffs": [...], "order": m}.
bool is_cyclo(const json& j) { return j.is_object() && j.size() == 2 && j.contains("order") && j.contains("coeffs"); }

std::string flatten_cell(const json& j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (is_cyclo(j)) {
        std::string out = std::to_string(j["order"].get<unsigned long>()) + ":[";
        bool first = true;
        for (const auto& c : j["coeffs"]) {
            out += (first ? "" : ",") + c.get<std::string>();
            first = false;
        }
        return out + "]";
    }
    if (j.is_array()) {
        std::string out;
        bool first = true;
        for (const auto& e : j) {
            out += (first ? "" : ";") + flatten_cell(e);
            first = false;
        }
        return out;
    }
    return j.dump();
}

void flatten_row(const json& row, const std::string& prefix, std::map<std::string, std::string>& cells)
{
    for (const auto& [key, value] : row.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object() && !is_cyclo(value)) {
            flatten_row(value, name, cells);
        } else {
            cells[name] = flatten_cell(value);
        }
    }
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

std::string to_csv(const json& rows)
{
    std::vector<std::map<std::string, std::string>> flat;
    std::set<std::string> columns;
    for (const auto& row : rows) {
        auto& cells = flat.emplace_back();
        flatten_row(row, "", cells);
        for (const auto& [k, v] : cells) {
            columns.insert(k);
        }
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& c : columns) {
        os << (first ? "" : ",") << csv_escape(c);
        first = false;
    }
    os << "\n";
    for (const auto& cells : flat) {
        first = true;
        for (const auto& c : columns) {
            auto it = cells.find(c);
            os << (first ? "" : ",") << (it == cells.end() ? "" : csv_escape(it->second));
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

void emit(const RunConfig& cfg, const json& rows)
{
    const std::string text = cfg.format == Format::json ? rows.dump(2) + "\n" : to_csv(rows);
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open output file " + cfg.output);
    }
    out << text;
}

geuler::CharacterFilter parse_filter(const std::string& s)
{
    return s == "primitive" ? geuler::CharacterFilter::primitive : geuler::CharacterFilter::all;
}

geuler::Reading parse_reading(const std::string& s)
{
    return s == "normalized" ? geuler::Reading::normalized : geuler::Reading::literal;
}

std::vector<unsigned long> moduli_or(const RunConfig& cfg, std::vector<unsigned long> fallback)
{
    return cfg.moduli.empty() ? std::move(fallback) : cfg.moduli;
}

// Rejects even moduli and primes dividing a modulus before any computation.
void validate(const RunConfig& cfg, const std::string& sub)
{
    for (auto d : cfg.moduli) {
        if (d == 0 || d % 2 == 0) {
            throw UsageError("--modulus values must be odd positive integers, got " + std::to_string(d));
        }
    }
    for (auto w : cfg.w1s) {
        if (w % 2 == 0) {
            throw UsageError("--w1 values must be odd, got " + std::to_string(w));
        }
    }
    for (auto w : cfg.w2s) {
        if (w % 2 == 0) {
            throw UsageError("--w2 values must be odd, got " + std::to_string(w));
        }
    }
    if (sub == "fermionic") {
        if (cfg.p % 2 == 0 || !geuler::detail::is_prime(cfg.p)) {
            throw UsageError("--p must be an odd prime");
        }
        for (auto d : cfg.moduli) {
            if (d % cfg.p == 0) {
                throw UsageError("--p must not divide --modulus " + std::to_string(d));
            }
        }
        if (cfg.level == 0) {
            throw UsageError("--N must be positive");
        }
    }
    if (sub == "verify") {
        for (auto n : cfg.ns) {
            if (n % 2 == 0) {
                throw UsageError("--n values must be odd, got " + std::to_string(n));
            }
        }
    }
}

int run_euler(const RunConfig& cfg)
{
    const auto e = geuler::euler_numbers(cfg.max);
    json rows = json::array();
    for (std::size_t n = 0; n <= cfg.max; ++n) {
        rows.push_back(json{{"n", n}, {"E_n", e[n]}, {"E_n(x)", geuler::euler_polynomial_rational(n)}});
    }
    emit(cfg, rows);
    return kExitOk;
}

int run_characters(const RunConfig& cfg)
{
    json rows = json::array();
    for (const auto& chi : geuler::select_characters(moduli_or(cfg, {}), parse_filter(cfg.chars), cfg.char_index)) {
        rows.push_back(chi);
    }
    emit(cfg, rows);
    return kExitOk;
}

int run_gen_euler(const RunConfig& cfg)
{
    json rows = json::array();
    for (const auto& chi : geuler::select_characters(moduli_or(cfg, {}), parse_filter(cfg.chars), cfg.char_index)) {
        json polys = json::array();
        for (std::size_t n = 0; n <= cfg.max; ++n) {
            polys.push_back(geuler::gen_euler_poly(chi, n));
        }
        rows.push_back(json{{"character", chi},
                            {"numbers", geuler::gen_euler_numbers(chi, cfg.max).numbers},
                            {"polynomials", std::move(polys)}});
    }
    emit(cfg, rows);
    return kExitOk;
}

int run_power_sum(const RunConfig& cfg)
{
    json rows = json::array();
    for (const auto& chi : geuler::select_characters(moduli_or(cfg, {}), parse_filter(cfg.chars), cfg.char_index)) {
        rows.push_back(json{{"character", chi.label()},
                            {"d", chi.modulus()},
                            {"k", cfg.k},
                            {"n", cfg.n},
                            {"T", geuler::alternating_power_sum(chi, cfg.k, cfg.n)}});
    }
    emit(cfg, rows);
    return kExitOk;
}

int run_fermionic(const RunConfig& cfg)
{
    const geuler::Rational x = geuler::Rational::parse(cfg.x);
    json rows = json::array();
    bool all_ok = true;
    for (const auto& chi : geuler::select_characters(moduli_or(cfg, {}), parse_filter(cfg.chars), cfg.char_index)) {
        const auto s = geuler::fermionic_partial_sum(chi, cfg.k, cfg.p, cfg.level, x);
        const auto target = geuler::gen_euler_poly(chi, cfg.k)(geuler::CycloRational(x));
        const auto v = geuler::padic_valuation(s - target, cfg.p);
        const bool ok = v >= geuler::Valuation(static_cast<long>(cfg.level));
        all_ok = all_ok && ok;
        rows.push_back(json{{"character", chi.label()},
                            {"d", chi.modulus()},
                            {"k", cfg.k},
                            {"p", cfg.p},
                            {"N", cfg.level},
                            {"x", x},
                            {"S_N", s},
                            {"E_k_chi(x)", target},
                            {"valuation", v.str()},
                            {"congruent", ok}});
    }
    emit(cfg, rows);
    return all_ok ? kExitOk : kExitFailed;
}

int run_verify(const RunConfig& cfg)
{
    std::vector<geuler::VerificationReport> reports;
    geuler::SymmetryGrid grid;
    grid.moduli = moduli_or(cfg, {1, 3, 5, 7, 9});
    grid.filter = parse_filter(cfg.chars);
    grid.character_index = cfg.char_index;
    grid.w1s = cfg.w1s;
    grid.w2s = cfg.w2s;
    grid.reading = parse_reading(cfg.reading);
    grid.threads = cfg.threads;

    if (cfg.identity == "recurrence") {
        geuler::RecurrenceGrid rg;
        rg.count = cfg.count;
        rg.seed = cfg.seed;
        rg.max_degree = cfg.max_degree;
        rg.max_n = static_cast<unsigned>(cfg.max_n);
        reports = geuler::sweep_recurrence(rg);
    } else if (cfg.identity == "eq13") {
        reports = geuler::sweep_periodic_alternating_sum(grid.moduli, grid.filter, cfg.max_k, cfg.ns,
                                                         cfg.char_index, cfg.threads);
    } else if (cfg.identity == "theorem1") {
        grid.max_degree = cfg.max_l;
        reports = geuler::sweep_symmetric_convolution(grid);
    } else if (cfg.identity == "theorem2") {
        grid.max_degree = cfg.max_n;
        reports = geuler::sweep_symmetric_shift_sum(grid);
    } else if (cfg.identity == "tchi-all") {
        grid.max_degree = cfg.max_l;
        reports = geuler::sweep_expansion_coherence(
            grid, cfg.include_closed ? geuler::all_expansion_forms() : geuler::printed_expansion_forms());
    } else {
        throw UsageError("unknown identity " + cfg.identity);
    }
    json rows = json::array();
    for (const auto& r : reports) {
        rows.push_back(r);
    }
    emit(cfg, rows);
    return geuler::all_passed(reports) ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Exact generalized Euler numbers, Dirichlet characters, and identity verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("-o,--output", cfg.output, "Output file (default: standard output)");
    app.add_option("--threads", cfg.threads, "Worker threads for sweeps (0 = hardware)");

    std::size_t truncation = 0;
    try {
        truncation = truncation_default();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    cfg.max = truncation;

    auto add_char_opts = [&cfg](CLI::App* sub, bool moduli_required) {
        auto* m = sub->add_option("--modulus", cfg.moduli, "Odd moduli d");
        if (moduli_required) {
            m->required();
        }
        sub->add_option("--chars", cfg.chars, "Character filter")->check(CLI::IsMember({"all", "primitive"}));
        sub->add_option("--char-index", cfg.char_index, "Enumeration index of a single character");
    };

    auto* euler = app.add_subcommand("euler", "Classical Euler numbers and polynomials");
    euler->add_option("--max", cfg.max, "Largest index N");

    auto* characters = app.add_subcommand("characters", "Dirichlet characters of odd modulus");
    add_char_opts(characters, true);

    auto* gen = app.add_subcommand("gen-euler", "Generalized Euler numbers and polynomials attached to chi");
    add_char_opts(gen, true);
    gen->add_option("--max", cfg.max, "Largest index N");

    auto* psum = app.add_subcommand("power-sum", "Alternating character power sums T_{k,chi}(n)");
    add_char_opts(psum, true);
    psum->add_option("--k", cfg.k, "Power k")->required();
    psum->add_option("--n", cfg.n, "Upper summation index n")->required();

    auto* ferm = app.add_subcommand("fermionic", "Truncated fermionic sums S_N and their p-adic congruence");
    add_char_opts(ferm, true);
    ferm->add_option("--k", cfg.k, "Power k")->required();
    ferm->add_option("--p", cfg.p, "Odd prime p not dividing d")->required();
    ferm->add_option("--N", cfg.level, "Level N (sum over d p^N terms)")->required();
    ferm->add_option("--x", cfg.x, "Rational shift x, e.g. 1/3");

    auto* verify = app.add_subcommand("verify", "Exact identity sweeps; exit 0 iff every check passes");
    verify->add_option("--identity", cfg.identity, "Identity to verify")
        ->required()
        ->check(CLI::IsMember({"recurrence", "eq13", "theorem1", "theorem2", "tchi-all"}));
    add_char_opts(verify, false);
    verify->add_option("--w1", cfg.w1s, "Odd weights w1");
    verify->add_option("--w2", cfg.w2s, "Odd weights w2");
    verify->add_option("--max-l", cfg.max_l, "Largest t-order l");
    verify->add_option("--max-n", cfg.max_n, "Largest degree n (or shift n for recurrence)");
    verify->add_option("--max-k", cfg.max_k, "Largest power k");
    verify->add_option("--n", cfg.ns, "Odd multipliers n");
    verify->add_option("--reading", cfg.reading, "literal: as written; normalized: consistent with the closed form")
        ->check(CLI::IsMember({"literal", "normalized"}));
    verify->add_flag("--include-closed", cfg.include_closed, "Also compare against the closed-form series");
    verify->add_option("--count", cfg.count, "Random polynomials for the recurrence check");
    verify->add_option("--seed", cfg.seed, "Seed for the random polynomials");
    verify->add_option("--max-degree", cfg.max_degree, "Largest random polynomial degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    cfg.format = format == "csv" ? Format::csv : Format::json;

    try {
        if (*verify && cfg.identity == "recurrence" && verify->count("--max-n") == 0) {
            cfg.max_n = 6;
        }
        const std::string sub = app.get_subcommands().front()->get_name();
        validate(cfg, sub);
        if (sub == "euler") {
            return run_euler(cfg);
        }
        if (sub == "characters") {
            return run_characters(cfg);
        }
        if (sub == "gen-euler") {
            return run_gen_euler(cfg);
        }
        if (sub == "power-sum") {
            return run_power_sum(cfg);
        }
        if (sub == "fermionic") {
            return run_fermionic(cfg);
        }
        return run_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
