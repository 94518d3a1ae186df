#pragma once

#include "absplit/assembly/expression.hpp"
#include "absplit/exact/combinatorics.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace absplit::assembly {

enum class Format { text, json };

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    throw InputError("unknown format '" + s + "' (expected text or json)");
}

inline std::string sphere_token(unsigned p, unsigned q) {
    return "S^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

/// S^{0,0} ^ J_0 is the unit; J_0 = S^{0,0} is never printed as a J-factor.
inline std::string cell_token(const PlusPartCell& c) {
    if (c.j_index == 0) return sphere_token(c.p, c.q);
    const std::string j = "J_" + std::to_string(c.j_index);
    if (c.p == 0 && c.q == 0) return j;
    return sphere_token(c.p, c.q) + " ∧ " + j;
}

inline std::string render_fallback(const IntegralFallback& f) {
    return sphere_token(0, 0) + " ∨ F ∨ " + sphere_token(2 * f.g, f.g);
}

/**
 * Text form, e.g. for an elliptic curve with n(X) = 1:
 *   S^{0,0} ∨ J_1 ∨ S^{2,1} ∨ 1·(S^{0,0} ∨ S^{1,0})
 * The minus part is written as n(X) copies of the wedge of C(g,i) spheres S^{i,0};
 * inner multiplicities above one carry a "c·" prefix.
 */
inline std::string render_text(const SplittingExpression& e) {
    const std::string vee = " ∨ ";
    if (e.status == SplitStatus::no_rational_point) return "no splitting claimed";
    if (!e.claims_splitting()) {
        if (e.integral_fallback) return render_fallback(*e.integral_fallback);
        return "no splitting claimed";
    }
    std::string out;
    for (const auto& c : e.plus_part) out += (out.empty() ? "" : vee) + cell_token(c);
    std::string inner;
    for (const auto& m : e.minus_part) {
        const std::uint64_t c = m.multiplicity / e.n_components;
        inner += (inner.empty() ? "" : vee) + (c > 1 ? std::to_string(c) + "·" : "") + sphere_token(m.i, 0);
    }
    out += (out.empty() ? "" : vee) + std::to_string(e.n_components) + "·(" + inner + ")";
    return out;
}

using SuiteStatuses = std::vector<std::pair<std::string, std::string>>;

/// Fixed field order: g, lambda, n_components, status, plus_part, minus_part,
/// integral_fallback, notes, verification.
inline nlohmann::ordered_json to_json(const SplittingExpression& e, const SuiteStatuses& verification = {}) {
    nlohmann::ordered_json j;
    j["g"] = e.g;
    j["lambda"] = to_string(e.lambda);
    j["n_components"] = e.n_components;
    j["status"] = to_string(e.status);
    j["plus_part"] = nlohmann::ordered_json::array();
    for (const auto& c : e.plus_part) {
        nlohmann::ordered_json cell;
        cell["p"] = c.p;
        cell["q"] = c.q;
        cell["j_index"] = c.j_index;
        j["plus_part"].push_back(cell);
    }
    j["minus_part"] = nlohmann::ordered_json::array();
    for (const auto& m : e.minus_part) {
        nlohmann::ordered_json s;
        s["i"] = m.i;
        s["multiplicity"] = m.multiplicity;
        j["minus_part"].push_back(s);
    }
    if (e.integral_fallback) {
        nlohmann::ordered_json f;
        f["g"] = e.integral_fallback->g;
        f["summands"] = {sphere_token(0, 0), "F", sphere_token(2 * e.integral_fallback->g, e.integral_fallback->g)};
        j["integral_fallback"] = f;
    } else {
        j["integral_fallback"] = nullptr;
    }
    j["notes"] = e.notes;
    j["verification"] = nlohmann::ordered_json::object();
    for (const auto& [suite, status] : verification) j["verification"][suite] = status;
    return j;
}

inline SplittingExpression from_json(const nlohmann::json& j) {
    try {
        SplittingExpression e;
        e.g = j.at("g").get<unsigned>();
        e.lambda = parse_lambda(j.at("lambda").get<std::string>());
        e.n_components = j.at("n_components").get<std::uint64_t>();
        e.status = parse_status(j.at("status").get<std::string>());
        for (const auto& c : j.at("plus_part"))
            e.plus_part.push_back({c.at("p").get<unsigned>(), c.at("q").get<unsigned>(), c.at("j_index").get<unsigned>()});
        for (const auto& m : j.at("minus_part"))
            e.minus_part.push_back({m.at("i").get<unsigned>(), m.at("multiplicity").get<std::uint64_t>()});
        if (j.contains("integral_fallback") && !j.at("integral_fallback").is_null())
            e.integral_fallback = IntegralFallback{j.at("integral_fallback").at("g").get<unsigned>()};
        if (j.contains("notes")) e.notes = j.at("notes").get<std::vector<std::string>>();
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed splitting document: ") + ex.what());
    }
}

inline std::string render(const SplittingExpression& e, Format f, const SuiteStatuses& verification = {}) {
    if (f == Format::text) return render_text(e);
    return to_json(e, verification).dump(2);
}

inline SplittingExpression parse_json(const std::string& text) {
    try {
        return from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& ex) {
        throw InputError(std::string("not a JSON document: ") + ex.what());
    }
}

}  // namespace absplit::assembly
