#pragma once

#include "absplit/errors.hpp"
#include "absplit/exact/combinatorics.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace absplit::real_locus {

/**
 * A prime p of the totally real order A lying over 2.
 *
 * ord_disc is the valuation at p of the discriminant of B over A, ord_two the
 * valuation of 2 (the ramification index of p over Q) and residue_degree the
 * degree of A/p over F_2. epsilon is the ramification-module parity at the
 * prime of B above p; it is present exactly when ord_disc is positive and even.
 */
struct PrimeOverTwo {
    unsigned ord_disc = 0;
    unsigned residue_degree = 1;
    unsigned ord_two = 1;
    std::optional<unsigned> epsilon;

    bool ramified() const { return ord_disc > 0; }
    bool needs_epsilon() const { return ord_disc > 0 && ord_disc % 2 == 0; }
    unsigned a() const { return ord_disc / 2; }

    friend bool operator==(const PrimeOverTwo&, const PrimeOverTwo&) = default;
};

struct CMFieldData {
    unsigned g = 0;
    std::vector<PrimeOverTwo> primes_over_two;
    bool has_odd_ramified_primes = false;  // recorded, never counted

    friend bool operator==(const CMFieldData&, const CMFieldData&) = default;
};

/// Exponents e_i of M = a * prod P_i^{e_i} at the ramified primes of B.
struct ModuleExponents {
    std::vector<std::int64_t> exponents;
};

/// eps_i = 2 d_i - e_i with d_i = floor((e_i + 1)/2); the parity of e_i.
inline std::vector<unsigned> ramification_epsilons(const ModuleExponents& m) {
    std::vector<unsigned> out;
    out.reserve(m.exponents.size());
    for (std::int64_t e : m.exponents) {
        const std::int64_t num = e + 1;
        const std::int64_t d = num >= 0 ? num / 2 : -((-num + 1) / 2);
        out.push_back(static_cast<unsigned>(2 * d - e));
    }
    return out;
}

/// Checks everything except the presence of epsilons on even-ord primes.
inline void validate_structure(const CMFieldData& d) {
    if (d.g == 0) throw InputError("abelian variety of dimension 0 is not supported");
    std::uint64_t degree = 0;
    for (std::size_t i = 0; i < d.primes_over_two.size(); ++i) {
        const auto& p = d.primes_over_two[i];
        const std::string at = "prime over 2 #" + std::to_string(i);
        if (p.residue_degree == 0 || p.ord_two == 0)
            throw InputError(at + ": residue degree and ord(2) must be positive");
        if (p.ramified() && (p.ord_disc < 2 || p.ord_disc > 2 * p.ord_two + 1))
            throw InvariantError(at + ": ord(disc)=" + std::to_string(p.ord_disc) + " outside [2, 2*ord(2)+1] = [2, " +
                                 std::to_string(2 * p.ord_two + 1) + "]");
        if (p.epsilon && !p.needs_epsilon())
            throw InvariantError(at + ": epsilon given but ord(disc)=" + std::to_string(p.ord_disc) +
                                 " is not positive and even");
        if (p.epsilon && *p.epsilon > 1) throw InputError(at + ": epsilon must be 0 or 1");
        degree += static_cast<std::uint64_t>(p.ord_two) * p.residue_degree;
    }
    if (degree != d.g)
        throw InvariantError("sum of ord(2)*f over primes above 2 is " + std::to_string(degree) +
                             ", but [K:Q] = g = " + std::to_string(d.g));
}

inline void validate(const CMFieldData& d) {
    validate_structure(d);
    for (std::size_t i = 0; i < d.primes_over_two.size(); ++i)
        if (d.primes_over_two[i].needs_epsilon() && !d.primes_over_two[i].epsilon)
            throw IncompleteInput("prime over 2 #" + std::to_string(i) + " has even ord(disc)=" +
                                  std::to_string(d.primes_over_two[i].ord_disc) + " and needs epsilon");
}

namespace detail {

inline std::uint64_t pow2(std::uint64_t e) {
    if (e > 62) throw InputError("component count 2^" + std::to_string(e) + " exceeds the supported range");
    return std::uint64_t{1} << e;
}

/// sum a_i f_i - sum eps_i f_i for the given epsilon assignment (indexed like primes).
inline std::int64_t exponent(const CMFieldData& d, const std::vector<unsigned>& eps) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < d.primes_over_two.size(); ++i) {
        const auto& p = d.primes_over_two[i];
        e += static_cast<std::int64_t>(p.a()) * p.residue_degree;
        if (p.needs_epsilon()) e -= static_cast<std::int64_t>(eps[i]) * p.residue_degree;
    }
    return e;
}

}  // namespace detail

/// log_2 of the number of connected components of X(R).
inline unsigned component_exponent(const CMFieldData& d) {
    validate(d);
    std::vector<unsigned> eps;
    for (const auto& p : d.primes_over_two) eps.push_back(p.epsilon.value_or(0));
    const std::int64_t e = detail::exponent(d, eps);
    if (e < 0 || e > static_cast<std::int64_t>(d.g))
        throw InvariantError("component exponent " + std::to_string(e) + " outside [0, g]");
    return static_cast<unsigned>(e);
}

/// n(X) = prod 2^{a_i f_i} / prod 2^{eps_i f_i}, a_i = floor(ord(disc)/2).
inline std::uint64_t component_count(const CMFieldData& d) { return detail::pow2(component_exponent(d)); }

/// All values of n(X) over every epsilon assignment; supplied epsilons are ignored.
inline std::set<std::uint64_t> gamma_possibilities(const CMFieldData& d) {
    validate_structure(d);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < d.primes_over_two.size(); ++i)
        if (d.primes_over_two[i].needs_epsilon()) free.push_back(i);
    if (free.size() > 20) throw InputError("too many even-ord primes over 2 to enumerate");
    std::set<std::uint64_t> out;
    std::vector<unsigned> eps(d.primes_over_two.size(), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        for (std::size_t b = 0; b < free.size(); ++b) eps[free[b]] = (mask >> b) & 1U;
        out.insert(detail::pow2(static_cast<std::uint64_t>(detail::exponent(d, eps))));
    }
    return out;
}

/// True iff the discriminant is prime to (2); then X(R) is connected for every choice.
inline bool all_components_connected_iff(const CMFieldData& d) {
    bool coprime = true;
    for (const auto& p : d.primes_over_two)
        if (p.ramified()) coprime = false;
    const bool always_one = gamma_possibilities(d) == std::set<std::uint64_t>{1};
    if (coprime != always_one)
        throw InvariantError("discriminant coprimality disagrees with the enumerated component counts");
    return coprime;
}

namespace detail {

inline bool squarefree(std::int64_t d) {
    std::uint64_t n = static_cast<std::uint64_t>(d < 0 ? -d : d);
    if (n == 0) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

inline void attach_epsilon(CMFieldData& data, std::optional<unsigned> epsilon, const std::string& what) {
    bool needed = false;
    for (auto& p : data.primes_over_two)
        if (p.needs_epsilon()) {
            needed = true;
            if (!epsilon) throw IncompleteInput(what + ": discriminant has even valuation at 2, epsilon is required");
            if (*epsilon > 1) throw InputError(what + ": epsilon must be 0 or 1");
            p.epsilon = epsilon;
        }
    if (!needed && epsilon)
        throw InputError(what + ": epsilon given but no prime over 2 has even discriminant valuation");
}

}  // namespace detail

/// Structure of B = O_{Q(sqrt d)} over A = Z at 2, without an epsilon choice.
inline CMFieldData quadratic_field(std::int64_t d) {
    if (d >= 0) throw InputError("quadratic CM field needs d < 0, got " + std::to_string(d));
    if (!detail::squarefree(d)) throw InputError(std::to_string(d) + " is not squarefree");
    const std::int64_t r = ((d % 4) + 4) % 4;
    PrimeOverTwo p;
    p.residue_degree = 1;
    p.ord_two = 1;
    // disc = (d) for d = 1 mod 4, (4d) otherwise
    p.ord_disc = r == 1 ? 0 : (r == 2 ? 3 : 2);
    CMFieldData data{1, {p}, false};
    const std::int64_t odd = r == 2 ? -d / 2 : -d;
    data.has_odd_ramified_primes = odd > 1;
    return data;
}

inline CMFieldData quadratic_cm_data(std::int64_t d, std::optional<unsigned> epsilon = std::nullopt) {
    CMFieldData data = quadratic_field(d);
    detail::attach_epsilon(data, epsilon, "Q(sqrt(" + std::to_string(d) + "))");
    return data;
}

namespace detail {

inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t mod) {
    std::uint64_t x = a % mod;
    std::uint64_t k = 1;
    while (x != 1) {
        x = x * a % mod;
        ++k;
    }
    return k;
}

inline bool is_prime_power(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1;
    }
    return true;
}

inline bool in_cyclic_subgroup(std::uint64_t gen, std::uint64_t target, std::uint64_t mod) {
    std::uint64_t x = 1;
    do {
        if (x == target % mod) return true;
        x = x * gen % mod;
    } while (x != 1);
    return false;
}

}  // namespace detail

/**
 * Structure at 2 of B = Z[zeta_k] over A = B cap Q(zeta_k + 1/zeta_k).
 *
 * Write k = 2^a k' with k' odd. When 4 | k a fixed case table is used:
 * a single prime over 2 with residue degree phi(k') and ord(disc) = 2. For
 * k = 2k' the ring equals Z[zeta_{k'}], so k' is used instead. For odd k the
 * discriminant is prime to 2; the primes of A over 2 are then unramified and
 * their residue degree follows from the order of 2 modulo k and whether the
 * Frobenius contains complex conjugation.
 */
inline CMFieldData cyclotomic_field(std::uint64_t k) {
    if (k <= 2) throw InputError("cyclotomic CM field needs k > 2, got " + std::to_string(k));
    unsigned a = 0;
    std::uint64_t odd = k;
    while (odd % 2 == 0) {
        odd /= 2;
        ++a;
    }
    const auto g = static_cast<unsigned>(euler_phi(k) / 2);
    CMFieldData data;
    data.g = g;
    // B/A ramifies at an odd prime only when k' is a prime power
    data.has_odd_ramified_primes = detail::is_prime_power(odd);
    if (a >= 2) {
        PrimeOverTwo p;
        p.residue_degree = static_cast<unsigned>(euler_phi(odd));
        p.ord_two = g / p.residue_degree;
        p.ord_disc = 2;
        data.primes_over_two.push_back(p);
        return data;
    }
    const std::uint64_t ord = detail::multiplicative_order(2, odd);
    const bool inert = detail::in_cyclic_subgroup(2, odd - 1, odd);
    const auto f = static_cast<unsigned>(inert ? ord / 2 : ord);
    for (unsigned i = 0; i < g / f; ++i) data.primes_over_two.push_back({0, f, 1, std::nullopt});
    return data;
}

inline CMFieldData cyclotomic_cm_data(std::uint64_t k, std::optional<unsigned> epsilon = std::nullopt) {
    CMFieldData data = cyclotomic_field(k);
    detail::attach_epsilon(data, epsilon, "Q(zeta_" + std::to_string(k) + ")");
    return data;
}

}  // namespace absplit::real_locus
