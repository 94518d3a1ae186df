#pragma once

#include "absplit/errors.hpp"
#include "absplit/exact/combinatorics.hpp"
#include "absplit/report.hpp"
#include "absplit/topology/chain_complex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace absplit::topology {

/// Wedge of spheres: dimension -> multiplicity. Keys present only with multiplicity >= 1.
struct SphereMultiset {
    std::map<unsigned, std::uint64_t> entries;

    void add(unsigned dim, std::uint64_t mult) {
        if (mult > 0) entries[dim] += mult;
    }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [d, m] : entries) t += m;
        return t;
    }

    std::uint64_t at(unsigned dim) const {
        auto it = entries.find(dim);
        return it == entries.end() ? 0 : it->second;
    }

    /// Smash with S^k: every sphere moves up k dimensions.
    SphereMultiset shifted(unsigned k) const {
        SphereMultiset s;
        for (const auto& [d, m] : entries) s.add(d + k, m);
        return s;
    }

    SphereMultiset& merge(const SphereMultiset& o) {
        for (const auto& [d, m] : o.entries) add(d, m);
        return *this;
    }

    std::string to_string() const {
        std::string s = "{";
        for (const auto& [d, m] : entries) s += (s.size() > 1 ? ", " : "") + std::to_string(d) + ": " + std::to_string(m);
        return s + "}";
    }

    friend bool operator==(const SphereMultiset&, const SphereMultiset&) = default;
};

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Suspension of the g-torus: C(g,i) copies of S^{i+1}, i = 1..g.
inline SphereMultiset torus_splitting(unsigned g) {
    if (g == 0) throw InputError("torus dimension must be positive");
    SphereMultiset s;
    for (unsigned i = 1; i <= g; ++i) s.add(i + 1, binomial(g, i).convert_to<std::uint64_t>());
    return s;
}

/// Inductive step S(T^{g+1}) = S(T^g) v S^2 v S(T^g) ^ S^1.
inline SphereMultiset torus_splitting_step(const SphereMultiset& prev) {
    SphereMultiset next = prev;
    next.add(2, 1);
    next.merge(prev.shifted(1));
    return next;
}

/// Suspension of X(R)_+ with n components: n copies of S^1 and n copies of the torus splitting.
inline SphereMultiset real_points_splitting(unsigned g, std::uint64_t n) {
    if (!is_power_of_two(n))
        throw InputError("component count " + std::to_string(n) + " is not a power of 2");
    SphereMultiset s;
    s.add(1, n);
    for (const auto& [d, m] : torus_splitting(g).entries) s.add(d, n * m);
    return s;
}

struct SplittingCertificate {
    CheckResult checks;
    std::vector<std::size_t> suspension_homology;  // reduced H_j of S(X(R)_+), j = 0..g+1
    std::vector<std::size_t> wedge_homology;       // reduced H_j of the wedge, j = 0..g+1

    bool passed() const { return checks.passed(); }
};

/// Cell count above which the oracle refuses to build the product model.
inline constexpr std::uint64_t kMaxOracleCells = 8192;

/**
 * Homology-level certificate for the splitting of S(X(R)_+). Builds the
 * cellular product model, computes its homology through Smith normal form,
 * shifts by one for the suspension of the based space and compares degree by
 * degree with the homology of the claimed wedge of spheres.
 */
inline SplittingCertificate certify_splitting(unsigned g, std::uint64_t n) {
    if (g == 0) throw InputError("torus dimension must be positive");
    if (!is_power_of_two(n)) throw InputError("component count " + std::to_string(n) + " is not a power of 2");
    if (g >= 62 || (n << g) > kMaxOracleCells || (n << g) >> g != n)
        throw InputError("product model with " + std::to_string(n) + " x 2^" + std::to_string(g) +
                         " cells is too large for the oracle");

    SplittingCertificate cert;
    const std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n);
    const ChainComplex model = product_chain_complex(g, n);
    const bool d2 = squares_to_zero(model);
    cert.checks.add("d_squared_zero " + tag, d2);
    if (!d2) return cert;

    const Homology h = homology(model);
    cert.suspension_homology.assign(g + 2, 0);
    for (std::size_t j = 0; j < h.betti.size(); ++j) cert.suspension_homology[j + 1] = h.betti[j];

    const SphereMultiset wedge = real_points_splitting(g, n);
    cert.wedge_homology.assign(g + 2, 0);
    for (const auto& [d, m] : wedge.entries) cert.wedge_homology.at(d) += m;

    auto fmt = [](const std::vector<std::size_t>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    cert.checks.add("homology_match " + tag, cert.suspension_homology == cert.wedge_homology,
                    "suspension " + fmt(cert.suspension_homology) + " vs wedge " + fmt(cert.wedge_homology));
    cert.checks.add("torsion_free " + tag, h.torsion_free());
    const std::uint64_t expected = n << g;
    cert.checks.add("summand_count " + tag, wedge.total() == expected,
                    std::to_string(wedge.total()) + " summands, expected " + std::to_string(expected));
    return cert;
}

}  // namespace absplit::topology
