#pragma once

#include "absplit/errors.hpp"
#include "absplit/exact/combinatorics.hpp"
#include "absplit/exact/truncated_poly.hpp"

#include <cstdint>
#include <string>

namespace absplit::dm {

/**
 * The Pontryagin subalgebra of correspondences on X x X (X of dimension g)
 * spanned by graph classes [Gamma_n]. Graph classes multiply like the group
 * ring of Z, and the relative nilpotency bound over base X kills (t-1)^{2g+1},
 * so the algebra is Q[t, 1/t]/((t-1)^{2g+1}). Elements are stored in the
 * variable u = t - 1, truncated at order 2g.
 */
struct CorrAlgebra {
    unsigned g = 1;

    std::size_t order() const { return 2 * static_cast<std::size_t>(g); }

    friend bool operator==(const CorrAlgebra&, const CorrAlgebra&) = default;
};

struct CorrElement {
    CorrAlgebra algebra;
    TruncatedPoly value;

    CorrElement(CorrAlgebra alg, TruncatedPoly v) : algebra(alg), value(std::move(v)) {
        if (value.order() != algebra.order())
            throw OrderMismatch("element of order " + std::to_string(value.order()) +
                                " does not belong to the algebra of order " + std::to_string(algebra.order()));
    }

    static CorrElement zero(CorrAlgebra alg) { return {alg, TruncatedPoly(alg.order())}; }

    friend bool operator==(const CorrElement& a, const CorrElement& b) {
        return a.algebra == b.algebra && a.value == b.value;
    }

    std::string to_string() const { return value.to_string(); }
};

namespace detail {
inline void require_same_algebra(const CorrElement& a, const CorrElement& b) {
    if (!(a.algebra == b.algebra))
        throw OrderMismatch("correspondences live on abelian varieties of different dimension (g=" +
                            std::to_string(a.algebra.g) + " vs g=" + std::to_string(b.algebra.g) + ")");
}
}  // namespace detail

inline CorrElement operator+(const CorrElement& a, const CorrElement& b) {
    detail::require_same_algebra(a, b);
    return {a.algebra, a.value + b.value};
}

inline CorrElement operator-(const CorrElement& a, const CorrElement& b) {
    detail::require_same_algebra(a, b);
    return {a.algebra, a.value - b.value};
}

inline CorrElement operator*(const Rational& s, const CorrElement& a) { return {a.algebra, s * a.value}; }

/// [Gamma_n] = t^n = (1+u)^n. [Gamma_0] is the Pontryagin unit [X x e].
inline CorrElement graph_class(CorrAlgebra alg, std::int64_t n) {
    const std::size_t order = alg.order();
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = Rational(binomial(n, static_cast<unsigned>(k)));
    return {alg, TruncatedPoly(order, std::move(c))};
}

/// Pontryagin (convolution) product.
inline CorrElement pontryagin(const CorrElement& a, const CorrElement& b) {
    detail::require_same_algebra(a, b);
    return {a.algebra, poly_mul(a.value, b.value)};
}

inline CorrElement pontryagin_pow(const CorrElement& a, unsigned e) {
    return {a.algebra, poly_pow(a.value, e)};
}

/// log of a unit with constant term 1: log(1 + (a - 1)).
inline CorrElement log_graph(const CorrElement& a) {
    if (a.value.constant_term() != 1)
        throw DomainError("log_graph needs constant term 1, got " + to_string(a.value.constant_term()));
    return {a.algebra, poly_log1p(a.value - TruncatedPoly::one(a.algebra.order()))};
}

/// Left composition with [Gamma_n]: the ring substitution t -> t^n, i.e.
/// u -> (1+u)^n - 1.
inline CorrElement substitute_power(const CorrElement& a, std::int64_t n) {
    const auto order = a.algebra.order();
    const TruncatedPoly shift = graph_class(a.algebra, n).value - TruncatedPoly::one(order);
    return {a.algebra, poly_compose(a.value, shift)};
}

/// phi_m on the u-basis: phi_m(u^k) = k! S(m,k), hence phi_m(t^b) = b^m.
/// No range check on m; see phi_functional for the version bound to an algebra.
inline Rational phi_on_u_basis(unsigned m, const TruncatedPoly& p) {
    Rational sum = 0;
    for (std::size_t k = 0; k <= p.order() && k <= m; ++k) {
        if (p[k] == 0) continue;
        sum += p[k] * Rational(factorial(static_cast<unsigned>(k)) * stirling_second(m, static_cast<unsigned>(k)));
    }
    return sum;
}

/// Linear functional with pi_i o a = phi_{2g-i}(a) pi_i. Only defined for
/// m <= 2g: beyond that it does not vanish on (t-1)^{2g+1}.
inline Rational phi_functional(CorrAlgebra alg, unsigned m, const CorrElement& a) {
    if (m > alg.order())
        throw DomainError("phi_" + std::to_string(m) + " is not well defined modulo (t-1)^" +
                          std::to_string(alg.order() + 1));
    if (!(a.algebra == alg)) throw OrderMismatch("element does not belong to the given algebra");
    return phi_on_u_basis(m, a.value);
}

}  // namespace absplit::dm
