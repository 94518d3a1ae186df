#pragma once

#include "absplit/assembly/coefficients.hpp"
#include "absplit/errors.hpp"
#include "absplit/real_locus/components.hpp"
#include "absplit/topology/splitting.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace absplit::assembly {

inline constexpr int kInputSchemaVersion = 1;

struct ExplicitCount {
    std::uint64_t n = 1;
};
struct QuadraticLocus {
    std::int64_t d = -1;
    std::optional<unsigned> epsilon;
};
struct CyclotomicLocus {
    std::uint64_t k = 3;
    std::optional<unsigned> epsilon;
};

using RealLocusSpec = std::variant<ExplicitCount, QuadraticLocus, CyclotomicLocus, real_locus::CMFieldData>;

struct VarietyInput {
    std::optional<unsigned> g;  // may be left out when the real-locus data fixes it
    RealLocusSpec real_locus;
    CoefficientRing coefficient_ring;
    bool rational_point = false;
};

/// g and n(X) after resolving the real-locus description.
struct ResolvedVariety {
    unsigned g = 0;
    std::uint64_t n = 1;
    std::optional<real_locus::CMFieldData> cm_data;  // absent for explicit n
    bool explicit_count = false;
};

namespace detail {
inline unsigned check_g(const std::optional<unsigned>& given, unsigned derived, const std::string& source) {
    if (given && *given != derived)
        throw InputError("g = " + std::to_string(*given) + " contradicts " + source + ", which has g = " +
                         std::to_string(derived));
    return derived;
}
}  // namespace detail

inline real_locus::CMFieldData cm_data_of(const VarietyInput& v) {
    if (const auto* q = std::get_if<QuadraticLocus>(&v.real_locus)) return real_locus::quadratic_cm_data(q->d, q->epsilon);
    if (const auto* c = std::get_if<CyclotomicLocus>(&v.real_locus)) return real_locus::cyclotomic_cm_data(c->k, c->epsilon);
    if (const auto* d = std::get_if<real_locus::CMFieldData>(&v.real_locus)) return *d;
    throw InputError("explicit component count carries no CM field data");
}

/// Throws InputError / IncompleteInput / InvariantError on unusable input.
inline ResolvedVariety resolve(const VarietyInput& v) {
    ResolvedVariety r;
    if (const auto* e = std::get_if<ExplicitCount>(&v.real_locus)) {
        if (!v.g) throw InputError("explicit component count needs g");
        if (*v.g == 0) throw InputError("g must be positive");
        r.g = *v.g;
        if (!topology::is_power_of_two(e->n))
            throw InputError("component count " + std::to_string(e->n) + " is not a power of 2");
        if (r.g < 63 && e->n > (std::uint64_t{1} << r.g))
            throw InputError("component count " + std::to_string(e->n) + " exceeds 2^g = 2^" + std::to_string(r.g));
        r.n = e->n;
        r.explicit_count = true;
        return r;
    }
    const auto data = cm_data_of(v);
    r.g = detail::check_g(v.g, data.g, "the real-locus data");
    r.n = real_locus::component_count(data);
    r.cm_data = data;
    return r;
}

namespace detail {

inline std::optional<unsigned> optional_epsilon(const nlohmann::json& j) {
    if (!j.contains("epsilon") || j.at("epsilon").is_null()) return std::nullopt;
    return j.at("epsilon").get<unsigned>();
}

inline real_locus::CMFieldData parse_cm_data(const nlohmann::json& j) {
    real_locus::CMFieldData d;
    d.g = j.at("g").get<unsigned>();
    d.has_odd_ramified_primes = j.value("has_odd_ramified_primes", false);
    for (const auto& p : j.at("primes_over_two")) {
        real_locus::PrimeOverTwo q;
        q.ord_disc = p.at("ord_disc").get<unsigned>();
        q.residue_degree = p.at("residue_degree").get<unsigned>();
        q.ord_two = p.at("ord_two").get<unsigned>();
        q.epsilon = optional_epsilon(p);
        d.primes_over_two.push_back(q);
    }
    return d;
}

inline CoefficientRing parse_ring(const nlohmann::json& j) {
    if (j.is_string()) return parse_lambda(j.get<std::string>());
    if (j.is_object()) {
        if (j.value("rational", false)) return CoefficientRing::rationals();
        std::set<unsigned> primes;
        if (j.contains("inverted_primes"))
            for (const auto& p : j.at("inverted_primes")) primes.insert(p.get<unsigned>());
        return CoefficientRing::localized(std::move(primes));
    }
    throw InputError("lambda must be a string such as \"Z[1/2]\" or an object");
}

}  // namespace detail

/**
 * Input document (JSON):
 *
 *   {
 *     "schema_version": 1,
 *     "g": 1,                         // optional unless real_locus is explicit
 *     "rational_point": true,         // default false: nothing is claimed
 *     "lambda": "Z[1/2]",             // or {"inverted_primes": [2, 3]} / {"rational": true}
 *     "real_locus": {"kind": "quadratic", "d": -2}
 *   }
 *
 * real_locus kinds: explicit {n}, quadratic {d, epsilon?}, cyclotomic {k, epsilon?},
 * cm_data {g, primes_over_two: [{ord_disc, residue_degree, ord_two, epsilon?}],
 * has_odd_ramified_primes?}.
 */
inline VarietyInput parse_variety_input(const nlohmann::json& doc) {
    try {
        const int version = doc.value("schema_version", kInputSchemaVersion);
        if (version != kInputSchemaVersion)
            throw InputError("unsupported input schema_version " + std::to_string(version));
        VarietyInput v;
        if (doc.contains("g")) {
            const auto g = doc.at("g").get<std::int64_t>();
            if (g <= 0) throw InputError("g must be positive");
            v.g = static_cast<unsigned>(g);
        }
        v.rational_point = doc.value("rational_point", false);
        v.coefficient_ring = doc.contains("lambda") ? detail::parse_ring(doc.at("lambda")) : CoefficientRing::rationals();

        const auto& rl = doc.at("real_locus");
        const std::string kind = rl.at("kind").get<std::string>();
        if (kind == "explicit") {
            const auto n = rl.at("n").get<std::int64_t>();
            if (n <= 0) throw InputError("component count must be positive");
            v.real_locus = ExplicitCount{static_cast<std::uint64_t>(n)};
        } else if (kind == "quadratic") {
            v.real_locus = QuadraticLocus{rl.at("d").get<std::int64_t>(), detail::optional_epsilon(rl)};
        } else if (kind == "cyclotomic") {
            v.real_locus = CyclotomicLocus{rl.at("k").get<std::uint64_t>(), detail::optional_epsilon(rl)};
        } else if (kind == "cm_data") {
            v.real_locus = detail::parse_cm_data(rl);
        } else {
            throw InputError("unknown real_locus kind '" + kind + "'");
        }
        return v;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed input document: ") + e.what());
    }
}

inline VarietyInput parse_variety_input(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("input is not valid JSON: ") + e.what());
    }
    return parse_variety_input(doc);
}

}  // namespace absplit::assembly
