#pragma once

#include "absplit/assembly/coefficients.hpp"
#include "absplit/motive/kunnemann.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace absplit::assembly {

using motive::PlusPartCell;

enum class SplitStatus {
    claimed,            ///< all hypotheses met
    conditional,        ///< explicit n(X): relies on the torus-times-finite-set topology of X(R)
    refused,            ///< Lambda does not invert (2g)!; only the integral fallback is offered
    no_rational_point,  ///< rational point not asserted; nothing is claimed
    integral,           ///< the three-term integral expression on its own
};

inline const char* to_string(SplitStatus s) {
    switch (s) {
        case SplitStatus::claimed: return "claimed";
        case SplitStatus::conditional: return "conditional";
        case SplitStatus::refused: return "refused";
        case SplitStatus::no_rational_point: return "no_rational_point";
        case SplitStatus::integral: return "integral";
    }
    return "?";
}

inline SplitStatus parse_status(const std::string& s) {
    for (auto v : {SplitStatus::claimed, SplitStatus::conditional, SplitStatus::refused,
                   SplitStatus::no_rational_point, SplitStatus::integral})
        if (s == to_string(v)) return v;
    throw InputError("unknown splitting status '" + s + "'");
}

/// S^{i,0} with multiplicity, a summand of the minus part.
struct MinusSphere {
    unsigned i = 0;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const MinusSphere&, const MinusSphere&) = default;
};

/// S^{0,0} v F v S^{2g,g} with F opaque.
struct IntegralFallback {
    unsigned g = 0;

    friend bool operator==(const IntegralFallback&, const IntegralFallback&) = default;
};

struct SplittingExpression {
    unsigned g = 0;
    CoefficientRing lambda;
    std::uint64_t n_components = 0;
    SplitStatus status = SplitStatus::claimed;
    std::vector<PlusPartCell> plus_part;   // sorted by (p, q, j_index)
    std::vector<MinusSphere> minus_part;   // sorted by i
    std::optional<IntegralFallback> integral_fallback;
    std::vector<std::string> notes;

    bool claims_splitting() const {
        return status == SplitStatus::claimed || status == SplitStatus::conditional;
    }

    std::uint64_t minus_total() const {
        std::uint64_t t = 0;
        for (const auto& m : minus_part) t += m.multiplicity;
        return t;
    }

    friend bool operator==(const SplittingExpression&, const SplittingExpression&) = default;
};

/// X_+ ~ S^{0,0} v F v S^{2g,g}, available over Z whenever X has a rational point.
inline SplittingExpression integral_top_cell(unsigned g) {
    if (g == 0) throw InputError("integral top-cell splitting needs g >= 1");
    SplittingExpression e;
    e.g = g;
    e.lambda = CoefficientRing::integers();
    e.status = SplitStatus::integral;
    e.integral_fallback = IntegralFallback{g};
    return e;
}

}  // namespace absplit::assembly
