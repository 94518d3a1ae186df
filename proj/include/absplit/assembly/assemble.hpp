#pragma once

#include "absplit/assembly/expression.hpp"
#include "absplit/assembly/input.hpp"
#include "absplit/motive/kunnemann.hpp"
#include "absplit/topology/splitting.hpp"

#include <algorithm>

namespace absplit::assembly {

/// Plus-part cells of the Lefschetz decomposition, in serialization order.
inline std::vector<PlusPartCell> sorted_plus_part(unsigned g) {
    auto cells = motive::plus_part_cells(motive::kunnemann_decompose(g));
    std::sort(cells.begin(), cells.end());
    return cells;
}

/// Desuspends the real-points splitting: S^j in S(X(R)_+) becomes S^{j-1,0}.
inline std::vector<MinusSphere> minus_part_spheres(unsigned g, std::uint64_t n) {
    std::vector<MinusSphere> out;
    for (const auto& [dim, mult] : topology::real_points_splitting(g, n).entries) out.push_back({dim - 1, mult});
    return out;
}

/**
 * Assembles the splitting of X_+ in SH(R)_Lambda. The plus part comes from the
 * Lefschetz decomposition of the motive, one cell S^{2m,m} ^ J_i per piece
 * P^i(-m); the minus part is n(X) copies of the wedge of C(g,i) spheres S^{i,0}.
 *
 * Without a rational point nothing is claimed. When Lambda does not invert
 * (2g)! the splitting is refused and only the integral top-cell expression is
 * attached. Unresolvable real-locus data throws.
 */
inline SplittingExpression assemble_splitting(const VarietyInput& v) {
    const ResolvedVariety r = resolve(v);
    SplittingExpression e;
    e.g = r.g;
    e.lambda = v.coefficient_ring;
    e.n_components = r.n;

    if (!v.rational_point) {
        e.status = SplitStatus::no_rational_point;
        e.notes.push_back("no rational point asserted; no splitting claimed");
        return e;
    }
    const auto missing = missing_primes(v.coefficient_ring, r.g);
    if (!missing.empty()) {
        e.status = SplitStatus::refused;
        e.integral_fallback = IntegralFallback{r.g};
        std::string list;
        for (unsigned p : missing) list += (list.empty() ? "" : ", ") + std::to_string(p);
        e.notes.push_back("(2g)! is not invertible in " + to_string(v.coefficient_ring) + " (missing primes " + list +
                          "); offering the integral top-cell splitting");
        return e;
    }

    e.status = r.explicit_count ? SplitStatus::conditional : SplitStatus::claimed;
    e.plus_part = sorted_plus_part(r.g);
    e.minus_part = minus_part_spheres(r.g, r.n);
    if (r.explicit_count)
        e.notes.push_back("conditional: n(X) supplied directly; minus part assumes X(R) = (R/Z)^g x (Z/2)^d");
    if (v.coefficient_ring.rational)
        e.notes.push_back("over Q each J_i is a summand of the motivic spectrum of a product of curves");
    return e;
}

}  // namespace absplit::assembly
