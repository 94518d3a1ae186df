#pragma once

#include "absplit/errors.hpp"
#include "absplit/exact/number.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace absplit {

/**
 * Element of Q[u]/(u^{order+1}): a polynomial in a nilpotent variable u with
 * exact rational coefficients. The order is fixed at construction and every
 * product discards terms of degree above it. Mixing orders is an error.
 */
class TruncatedPoly {
public:
    explicit TruncatedPoly(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

    /// Coefficients beyond `order` must be zero; missing trailing ones are zero.
    TruncatedPoly(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() > order + 1) {
            for (std::size_t k = order + 1; k < coeffs_.size(); ++k)
                if (coeffs_[k] != 0)
                    throw InputError("coefficient of u^" + std::to_string(k) +
                                     " exceeds truncation order " + std::to_string(order));
        }
        coeffs_.resize(order + 1, Rational(0));
    }

    TruncatedPoly(std::size_t order, std::initializer_list<Rational> coeffs)
        : TruncatedPoly(order, std::vector<Rational>(coeffs)) {}

    static TruncatedPoly constant(std::size_t order, const Rational& c) {
        TruncatedPoly p(order);
        p.coeffs_[0] = c;
        return p;
    }

    static TruncatedPoly one(std::size_t order) { return constant(order, 1); }

    /// The monomial u^k (zero when k exceeds the order).
    static TruncatedPoly monomial(std::size_t order, std::size_t k, const Rational& c = 1) {
        TruncatedPoly p(order);
        if (k <= order) p.coeffs_[k] = c;
        return p;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    const Rational& constant_term() const { return coeffs_[0]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
        require_same_order(a, b);
        TruncatedPoly r = a;
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
        return r;
    }

    friend TruncatedPoly operator-(const TruncatedPoly& a, const TruncatedPoly& b) {
        require_same_order(a, b);
        TruncatedPoly r = a;
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] -= b.coeffs_[k];
        return r;
    }

    friend TruncatedPoly operator-(const TruncatedPoly& a) {
        TruncatedPoly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend TruncatedPoly operator*(const Rational& s, const TruncatedPoly& a) {
        TruncatedPoly r = a;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            if (!out.empty()) out += " + ";
            out += "(" + absplit::to_string(coeffs_[k]) + ")";
            if (k > 0) out += "u^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

    static void require_same_order(const TruncatedPoly& a, const TruncatedPoly& b) {
        if (a.order() != b.order())
            throw OrderMismatch("truncation orders differ: " + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()));
    }

private:
    std::vector<Rational> coeffs_;
};

/// Truncated product: coefficient k is sum_{i+j=k} a_i b_j, degrees above the order dropped.
inline TruncatedPoly poly_mul(const TruncatedPoly& a, const TruncatedPoly& b) {
    TruncatedPoly::require_same_order(a, b);
    const std::size_t n = a.order();
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return TruncatedPoly(n, std::move(out));
}

inline TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) { return poly_mul(a, b); }

inline TruncatedPoly poly_pow(const TruncatedPoly& base, unsigned e) {
    TruncatedPoly r = TruncatedPoly::one(base.order());
    for (unsigned i = 0; i < e; ++i) r = poly_mul(r, base);
    return r;
}

namespace detail {
inline void require_nilpotent(const TruncatedPoly& p, const char* op) {
    if (p.constant_term() != 0)
        throw DomainError(std::string(op) + " needs a nilpotent argument, got constant term " +
                          to_string(p.constant_term()));
}
}  // namespace detail

/// log(1 + p) = sum_{j>=1} (-1)^{j-1} p^j / j for p with zero constant term.
inline TruncatedPoly poly_log1p(const TruncatedPoly& p) {
    detail::require_nilpotent(p, "poly_log1p");
    const std::size_t n = p.order();
    TruncatedPoly sum(n);
    TruncatedPoly power = p;
    for (std::size_t j = 1; j <= n; ++j) {
        const Rational c(j % 2 == 1 ? 1 : -1, static_cast<long long>(j));
        sum = sum + c * power;
        power = poly_mul(power, p);
    }
    return sum;
}

/// exp(p) = sum_{j>=0} p^j / j! for p with zero constant term.
inline TruncatedPoly poly_exp(const TruncatedPoly& p) {
    detail::require_nilpotent(p, "poly_exp");
    const std::size_t n = p.order();
    TruncatedPoly sum = TruncatedPoly::one(n);
    TruncatedPoly term = TruncatedPoly::one(n);
    for (std::size_t j = 1; j <= n; ++j) {
        term = Rational(1, static_cast<long long>(j)) * poly_mul(term, p);
        sum = sum + term;
    }
    return sum;
}

/// a(q): substitute u -> q, where q has zero constant term (Horner).
inline TruncatedPoly poly_compose(const TruncatedPoly& a, const TruncatedPoly& q) {
    TruncatedPoly::require_same_order(a, q);
    detail::require_nilpotent(q, "poly_compose");
    const std::size_t n = a.order();
    TruncatedPoly r = TruncatedPoly::constant(n, a[n]);
    for (std::size_t k = n; k-- > 0;) r = poly_mul(r, q) + TruncatedPoly::constant(n, a[k]);
    return r;
}

}  // namespace absplit
