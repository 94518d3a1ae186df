#pragma once

#include "absplit/errors.hpp"
#include "absplit/exact/combinatorics.hpp"
#include "absplit/report.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

namespace absplit::assembly {

/// Lambda = Z[1/S] for a finite set of primes S, or Q.
struct CoefficientRing {
    std::set<unsigned> inverted_primes;
    bool rational = false;

    static CoefficientRing integers() { return {}; }
    static CoefficientRing rationals() { return {{}, true}; }
    static CoefficientRing localized(std::set<unsigned> primes) {
        for (unsigned p : primes)
            if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
        return {std::move(primes), false};
    }

    bool inverts(unsigned p) const { return rational || inverted_primes.count(p) > 0; }

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

/// "Q", "Z", "Z[1/2]", "Z[1/2,1/3]"; composite denominators invert all their prime factors.
inline CoefficientRing parse_lambda(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "Q" || s == "QQ") return CoefficientRing::rationals();
    if (s == "Z" || s == "ZZ") return CoefficientRing::integers();
    if (s.size() < 4 || s.substr(0, 2) != "Z[" || s.back() != ']')
        throw InputError("cannot parse coefficient ring '" + text + "'");
    std::set<unsigned> primes;
    const std::string body = s.substr(2, s.size() - 3);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const std::size_t comma = body.find(',', pos);
        const std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.size() < 3 || item.substr(0, 2) != "1/")
            throw InputError("expected 1/<integer> in coefficient ring, got '" + item + "'");
        unsigned long den = 0;
        try {
            std::size_t used = 0;
            den = std::stoul(item.substr(2), &used);
            if (used != item.size() - 2) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("bad denominator in '" + item + "'");
        }
        if (den < 2) throw InputError("denominator must be at least 2 in '" + item + "'");
        for (unsigned long p = 2; p * p <= den; ++p)
            while (den % p == 0) {
                primes.insert(static_cast<unsigned>(p));
                den /= p;
            }
        if (den > 1) primes.insert(static_cast<unsigned>(den));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return CoefficientRing::localized(std::move(primes));
}

inline std::string to_string(const CoefficientRing& r) {
    if (r.rational) return "Q";
    if (r.inverted_primes.empty()) return "Z";
    std::string s = "Z[";
    bool first = true;
    for (unsigned p : r.inverted_primes) {
        s += (first ? "1/" : ",1/") + std::to_string(p);
        first = false;
    }
    return s + "]";
}

/// Primes <= 2g (always including 2) that Lambda fails to invert.
inline std::vector<unsigned> missing_primes(const CoefficientRing& r, unsigned g) {
    std::vector<unsigned> needed = primes_up_to(std::max(2U, 2 * g));
    std::vector<unsigned> missing;
    for (unsigned p : needed)
        if (!r.inverts(p)) missing.push_back(p);
    return missing;
}

/// (2g)! and 2 must be units of Lambda.
inline CheckResult check_coefficients(const CoefficientRing& r, unsigned g) {
    CheckResult out;
    const auto missing = missing_primes(r, g);
    std::string detail;
    if (missing.empty()) {
        detail = "(2g)! = " + factorial(2 * g).str() + " is a unit in " + to_string(r);
    } else {
        detail = "missing primes {";
        for (std::size_t i = 0; i < missing.size(); ++i) detail += (i ? ", " : "") + std::to_string(missing[i]);
        detail += "}";
    }
    out.add("coefficients g=" + std::to_string(g) + " lambda=" + to_string(r), missing.empty(), detail);
    return out;
}

}  // namespace absplit::assembly
