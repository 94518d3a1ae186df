#pragma once

#include "absplit/assembly/assemble.hpp"
#include "absplit/assembly/render.hpp"
#include "absplit/dm/projectors.hpp"
#include "absplit/exact/smith.hpp"
#include "absplit/motive/kunnemann.hpp"
#include "absplit/report.hpp"
#include "absplit/topology/splitting.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace absplit::assembly {

enum class Depth { quick, full };

inline Depth parse_depth(const std::string& s) {
    if (s == "quick") return Depth::quick;
    if (s == "full") return Depth::full;
    throw InputError("unknown depth '" + s + "' (expected quick or full)");
}

struct VerifyOptions {
    Depth depth = Depth::full;
    std::uint64_t seed = 1;
    /// Negative control: replace pi_1 by pi_1 + pi_0 before checking the projector family.
    bool corrupt_projector = false;
};

enum class SuiteStatus { pass, fail, skipped };

inline const char* to_string(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::pass: return "pass";
        case SuiteStatus::fail: return "fail";
        case SuiteStatus::skipped: return "skipped";
    }
    return "?";
}

struct SuiteResult {
    std::string name;
    SuiteStatus status = SuiteStatus::pass;
    double runtime_ms = 0;
    CheckResult checks;
    std::string note;
};

struct Report {
    SplittingExpression expression;
    std::vector<SuiteResult> suites;

    bool passed() const {
        for (const auto& s : suites)
            if (s.status == SuiteStatus::fail) return false;
        return true;
    }

    SuiteStatuses statuses() const {
        SuiteStatuses out;
        for (const auto& s : suites) out.emplace_back(s.name, to_string(s.status));
        return out;
    }

    const SuiteResult* suite(const std::string& name) const {
        for (const auto& s : suites)
            if (s.name == name) return &s;
        return nullptr;
    }
};

namespace detail {

inline SuiteResult run_suite(const std::string& name, const std::function<CheckResult()>& body) {
    SuiteResult s;
    s.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        s.checks = body();
        s.status = s.checks.passed() ? SuiteStatus::pass : SuiteStatus::fail;
    } catch (const InputError& e) {
        s.status = SuiteStatus::skipped;
        s.note = e.what();
    } catch (const std::exception& e) {
        s.status = SuiteStatus::fail;
        s.checks.add(name + " raised", false, e.what());
    }
    s.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

inline TruncatedPoly random_poly(std::mt19937_64& rng, std::size_t order, bool nilpotent) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = (k == 0 && nilpotent) ? Rational(0) : Rational(num(rng), den(rng));
    return TruncatedPoly(order, std::move(c));
}

/// Seeded randomized algebraic identities.
inline CheckResult property_checks(std::uint64_t seed) {
    CheckResult r;
    std::mt19937_64 rng(seed);
    std::size_t assoc_bad = 0, explog_bad = 0, hom_bad = 0, snf_bad = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = 1 + trial % 8;
        const auto a = random_poly(rng, order, false), b = random_poly(rng, order, false), c = random_poly(rng, order, false);
        if (!(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))) || !(poly_mul(a, b) == poly_mul(b, a))) ++assoc_bad;
        const auto q = random_poly(rng, order, true);
        if (!(poly_exp(poly_log1p(q)) == TruncatedPoly::one(order) + q)) ++explog_bad;
        if (!(poly_log1p(poly_exp(q) - TruncatedPoly::one(order)) == q)) ++explog_bad;

        const dm::CorrAlgebra alg{static_cast<unsigned>(1 + trial % 4)};
        const dm::CorrElement x{alg, random_poly(rng, alg.order(), false)};
        const dm::CorrElement y{alg, random_poly(rng, alg.order(), false)};
        const std::int64_t n = static_cast<std::int64_t>(trial % 7) - 3;
        if (!(dm::substitute_power(dm::pontryagin(x, y), n) ==
              dm::pontryagin(dm::substitute_power(x, n), dm::substitute_power(y, n))))
            ++hom_bad;

        std::uniform_int_distribution<int> dim(1, 6), entry(-12, 12);
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
        const SmithForm s = smith_normal_form(m);
        bool ok = s.U * m * s.V == s.D;
        const auto d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0) ok = false;
        if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) ok = false;
        if (!ok) ++snf_bad;
    }
    const std::string seed_tag = "seed=" + std::to_string(seed);
    r.add("pontryagin_assoc_comm", assoc_bad == 0, seed_tag);
    r.add("exp_log_roundtrip", explog_bad == 0, seed_tag);
    r.add("substitution_homomorphism", hom_bad == 0, seed_tag);
    r.add("smith_reverification", snf_bad == 0, seed_tag);
    return r;
}

}  // namespace detail

/**
 * Runs every verification suite for one variety and collects the results.
 * Suites are independent; an exception inside one suite marks it failed (or
 * skipped, for inputs outside a suite's supported size) without stopping the rest.
 */
inline Report verify_all(const VarietyInput& v, const VerifyOptions& opt = {}) {
    Report rep;
    rep.expression = assemble_splitting(v);
    const unsigned g = rep.expression.g;
    const std::uint64_t n = rep.expression.n_components;
    const dm::IntRange range = opt.depth == Depth::full ? dm::IntRange{-3, 3} : dm::IntRange{-2, 2};

    rep.suites.push_back(detail::run_suite("coefficients", [&] { return check_coefficients(v.coefficient_ring, g); }));

    rep.suites.push_back(detail::run_suite("expression", [&] {
        CheckResult r;
        const auto& e = rep.expression;
        r.add("splitting_claimed", e.claims_splitting(), to_string(e.status));
        if (!e.claims_splitting()) return r;
        r.add("plus_part_matches_decomposition", e.plus_part == sorted_plus_part(g));
        const std::uint64_t expected_minus = n << g;
        r.add("minus_total", e.minus_total() == expected_minus,
              std::to_string(e.minus_total()) + " vs n*2^g = " + std::to_string(expected_minus));
        bool mult_ok = e.minus_part.size() == g + 1;
        for (const auto& m : e.minus_part)
            if (m.multiplicity != n * binomial(g, m.i).convert_to<std::uint64_t>()) mult_ok = false;
        r.add("minus_multiplicities", mult_ok, "n*C(g,i) for i = 0..g");
        const std::size_t total = e.plus_part.size() + e.minus_total();
        r.add("summand_count", total == motive::kunnemann_piece_count(g) + expected_minus,
              std::to_string(total) + " summands");
        bool tate = true;
        for (const auto& c : e.plus_part)
            if (c.p != 2 * c.q) tate = false;
        r.add("plus_part_tate_bidegrees", tate);
        return r;
    }));

    rep.suites.push_back(detail::run_suite("real_locus", [&] {
        CheckResult r;
        r.add("power_of_two", topology::is_power_of_two(n), std::to_string(n));
        r.add("bounds", n >= 1 && (g >= 63 || n <= (std::uint64_t{1} << g)), "1 <= n <= 2^g");
        if (!std::holds_alternative<ExplicitCount>(v.real_locus)) {
            const auto data = cm_data_of(v);
            const auto gamma = real_locus::gamma_possibilities(data);
            r.add("realizable", gamma.count(n) == 1, "n among all epsilon choices");
            bool all_odd = true;
            for (const auto& p : data.primes_over_two)
                if (p.needs_epsilon()) all_odd = false;
            r.add("gamma_singleton_iff_odd", (gamma.size() == 1) == all_odd);
        }
        return r;
    }));

    rep.suites.push_back(detail::run_suite("deninger_murre", [&] {
        const dm::CorrAlgebra alg{g};
        if (!opt.corrupt_projector) return dm::verify_dm(alg, range);
        dm::ProjectorFamily fam = dm::dm_projectors(alg);
        fam.projectors[1] = fam.projectors[1] + fam.projectors[0];
        return dm::verify_projector_family(fam, range);
    }));

    rep.suites.push_back(detail::run_suite("rank_conservation", [&] {
        return motive::rank_conservation(motive::kunnemann_decompose(g));
    }));

    rep.suites.push_back(detail::run_suite("hard_lefschetz", [&] {
        CheckResult r;
        for (const auto& p : motive::hard_lefschetz_pairs(g))
            r.add("M^" + std::to_string(p.degree) + " ~ M^" + std::to_string(p.target_degree) + "(" +
                      std::to_string(p.twist) + ")",
                  p.matches);
        return r;
    }));

    rep.suites.push_back(detail::run_suite("topology_oracle", [&] { return topology::certify_splitting(g, n).checks; }));

    if (opt.depth == Depth::full)
        rep.suites.push_back(detail::run_suite("properties", [&] { return detail::property_checks(opt.seed); }));
    return rep;
}

}  // namespace absplit::assembly
