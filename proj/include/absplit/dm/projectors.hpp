#pragma once

#include "absplit/dm/correspondence.hpp"
#include "absplit/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace absplit::dm {

/// pi_0 ... pi_{2g}, indexed by position.
struct ProjectorFamily {
    CorrAlgebra algebra;
    std::vector<CorrElement> projectors;

    const CorrElement& operator[](std::size_t i) const { return projectors.at(i); }
    std::size_t size() const { return projectors.size(); }
};

/// pi_i = log([Gamma_1])^{*(2g-i)} / (2g-i)!.
inline ProjectorFamily dm_projectors(CorrAlgebra alg) {
    const unsigned top = static_cast<unsigned>(alg.order());
    const CorrElement log_id = log_graph(graph_class(alg, 1));
    std::vector<CorrElement> pis;
    pis.reserve(top + 1);
    for (unsigned i = 0; i <= top; ++i) {
        const unsigned e = top - i;
        pis.push_back(Rational(1, factorial(e)) * pontryagin_pow(log_id, e));
    }
    return {alg, std::move(pis)};
}

/// pi_i o a = phi_{2g-i}(a) * pi_i.
inline CorrElement projector_compose(const ProjectorFamily& p, std::size_t i, const CorrElement& a) {
    if (i >= p.size())
        throw InputError("projector index " + std::to_string(i) + " out of range 0.." +
                         std::to_string(p.size() - 1));
    const unsigned m = static_cast<unsigned>(p.algebra.order() - i);
    return phi_functional(p.algebra, m, a) * p[i];
}

struct IntRange {
    std::int64_t lo = -3;
    std::int64_t hi = 3;
};

namespace detail {

inline Rational eigenvalue(std::int64_t n, unsigned exponent) {
    return Rational(ipow(Integer(n), exponent));
}

inline std::string join_ints(const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

/// Values of n in the range where [Gamma_n] o q != n^{2g-i} q.
inline std::vector<std::int64_t> eigen_failures(const CorrElement& q, unsigned exponent, IntRange range) {
    std::vector<std::int64_t> bad;
    for (std::int64_t n = range.lo; n <= range.hi; ++n)
        if (!(substitute_power(q, n) == eigenvalue(n, exponent) * q)) bad.push_back(n);
    return bad;
}

}  // namespace detail

/**
 * Checks the three defining properties of a projector family: the family sums
 * to the diagonal [Gamma_1], it is an orthogonal system of idempotents, and
 * [Gamma_n] o pi_i = n^{2g-i} pi_i (checked both as left composition and
 * through the right-composition functional) for every n in the range.
 */
inline VerificationReport verify_projector_family(const ProjectorFamily& fam, IntRange range) {
    VerificationReport rep;
    const CorrAlgebra alg = fam.algebra;
    const unsigned top = static_cast<unsigned>(alg.order());
    const std::string tag = "g=" + std::to_string(alg.g);

    if (fam.size() != top + 1) {
        rep.add("family_size " + tag, false,
                "expected " + std::to_string(top + 1) + " projectors, got " + std::to_string(fam.size()));
        return rep;
    }

    CorrElement sum = CorrElement::zero(alg);
    for (const auto& p : fam.projectors) sum = sum + p;
    rep.add("sum_is_diagonal " + tag, sum == graph_class(alg, 1), sum.to_string());

    std::size_t bad_pairs = 0;
    std::string first_bad;
    for (std::size_t i = 0; i <= top; ++i)
        for (std::size_t j = 0; j <= top; ++j) {
            const CorrElement lhs = projector_compose(fam, i, fam[j]);
            const CorrElement rhs = (i == j) ? fam[i] : CorrElement::zero(alg);
            if (!(lhs == rhs)) {
                if (bad_pairs++ == 0) first_bad = "pi_" + std::to_string(i) + " o pi_" + std::to_string(j);
            }
        }
    rep.add("orthogonal_idempotents " + tag, bad_pairs == 0,
            bad_pairs == 0 ? "all " + std::to_string((top + 1) * (top + 1)) + " pairs"
                           : std::to_string(bad_pairs) + " failing pairs, first " + first_bad);

    std::size_t left_bad = 0;
    std::size_t right_bad = 0;
    std::string detail;
    for (std::size_t i = 0; i <= top; ++i) {
        const unsigned e = top - static_cast<unsigned>(i);
        const auto bad = detail::eigen_failures(fam[i], e, range);
        if (!bad.empty()) {
            ++left_bad;
            detail += "pi_" + std::to_string(i) + " fails at n in {" + detail::join_ints(bad) + "}; ";
        }
        for (std::int64_t n = range.lo; n <= range.hi; ++n)
            if (!(projector_compose(fam, i, graph_class(alg, n)) == detail::eigenvalue(n, e) * fam[i])) ++right_bad;
    }
    const std::string rng = "n in [" + std::to_string(range.lo) + "," + std::to_string(range.hi) + "]";
    rep.add("eigen_relation_left " + tag, left_bad == 0, left_bad == 0 ? rng : detail);
    rep.add("eigen_relation_right " + tag, right_bad == 0,
            right_bad == 0 ? rng : std::to_string(right_bad) + " failing (i, n) pairs");
    return rep;
}

/**
 * Full Deninger-Murre verification: the defining properties of dm_projectors
 * plus a uniqueness probe. For every ordered pair i != j the perturbed class
 * pi_i + pi_j must violate the eigen-relation of weight 2g-i at some n in the
 * range; otherwise the range is too small to pin the family down.
 */
inline VerificationReport verify_dm(CorrAlgebra alg, IntRange range) {
    const ProjectorFamily fam = dm_projectors(alg);
    VerificationReport rep = verify_projector_family(fam, range);
    const unsigned top = static_cast<unsigned>(alg.order());

    std::size_t undetected = 0;
    std::string first;
    for (std::size_t i = 0; i <= top; ++i)
        for (std::size_t j = 0; j <= top; ++j) {
            if (i == j) continue;
            const CorrElement perturbed = fam[i] + fam[j];
            if (detail::eigen_failures(perturbed, top - static_cast<unsigned>(i), range).empty()) {
                if (undetected++ == 0) first = "pi_" + std::to_string(i) + " + pi_" + std::to_string(j);
            }
        }
    rep.add("uniqueness_probe g=" + std::to_string(alg.g), undetected == 0,
            undetected == 0 ? "every single-projector perturbation is detected"
                            : std::to_string(undetected) + " perturbations undetected, first " + first);
    return rep;
}

}  // namespace absplit::dm
