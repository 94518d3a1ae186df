#pragma once

#include "absplit/errors.hpp"
#include "absplit/exact/combinatorics.hpp"
#include "absplit/report.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace absplit::motive {

/// Which sum of the full Lefschetz decomposition emitted a piece.
enum class PieceOrigin {
    lower,   ///< P^{i-2k}(-k) with i < g
    upper,   ///< P^{i-2k}(-(k+g-i)) with i < g, the hard-Lefschetz mirror
    middle,  ///< P^{g-2k}(-k)
};

inline const char* to_string(PieceOrigin o) {
    switch (o) {
        case PieceOrigin::lower: return "lower";
        case PieceOrigin::upper: return "upper";
        case PieceOrigin::middle: return "middle";
    }
    return "?";
}

/// L^k P^i(X), isomorphic to P^i(X)(-k). It is a summand of M^{i+2k}(X).
struct MotivePiece {
    unsigned primitive_index = 0;
    unsigned lefschetz_power = 0;
    unsigned tate_twist = 0;  // m in (-m); equals lefschetz_power
    PieceOrigin origin = PieceOrigin::middle;

    unsigned cohomological_degree() const { return primitive_index + 2 * tate_twist; }

    std::string to_string() const {
        return "P^" + std::to_string(primitive_index) + "(-" + std::to_string(tate_twist) + ")";
    }

    /// Identity as a motive, ignoring provenance.
    auto key() const { return std::make_tuple(primitive_index, tate_twist); }
};

struct MotiveDecomposition {
    unsigned g = 0;
    std::vector<MotivePiece> pieces;
};

inline MotivePiece make_piece(unsigned p, unsigned twist, PieceOrigin origin) {
    return {p, twist, twist, origin};
}

/// Full Lefschetz decomposition of M(X) for an abelian variety of dimension g.
/// g = 0 degenerates to the single piece P^0.
inline MotiveDecomposition kunnemann_decompose(unsigned g) {
    MotiveDecomposition d{g, {}};
    for (unsigned i = 0; i < g; ++i)
        for (unsigned k = 0; k <= i / 2; ++k) {
            d.pieces.push_back(make_piece(i - 2 * k, k, PieceOrigin::lower));
            d.pieces.push_back(make_piece(i - 2 * k, k + g - i, PieceOrigin::upper));
        }
    for (unsigned k = 0; k <= g / 2; ++k) d.pieces.push_back(make_piece(g - 2 * k, k, PieceOrigin::middle));
    return d;
}

/// Number of pieces emitted by kunnemann_decompose(g), counted from the index set.
inline std::size_t kunnemann_piece_count(unsigned g) {
    std::size_t n = g / 2 + 1;
    for (unsigned i = 0; i < g; ++i) n += 2 * (i / 2 + 1);
    return n;
}

/// rank P^i = C(2g, i) - C(2g, i-2).
inline Integer primitive_rank(unsigned g, unsigned i) {
    if (i > g)
        throw InputError("primitive part P^" + std::to_string(i) + " does not exist for g=" + std::to_string(g));
    const Integer lead = binomial(2 * g, i);
    return i >= 2 ? lead - binomial(2 * g, i - 2) : lead;
}

inline Integer piece_rank(unsigned g, const MotivePiece& p) { return primitive_rank(g, p.primitive_index); }

/// Pieces grouped by the M^j they belong to, j = 0..2g.
inline std::vector<std::vector<MotivePiece>> pieces_by_degree(const MotiveDecomposition& d) {
    std::vector<std::vector<MotivePiece>> out(2 * d.g + 1);
    for (const auto& p : d.pieces) out.at(p.cohomological_degree()).push_back(p);
    return out;
}

inline CheckResult rank_conservation(const MotiveDecomposition& d) {
    CheckResult r;
    const unsigned g = d.g;
    Integer total = 0;
    for (const auto& p : d.pieces) total += piece_rank(g, p);
    const Integer expected = ipow(Integer(2), 2 * g);
    r.add("total_rank g=" + std::to_string(g), total == expected,
          "sum " + total.str() + ", expected 2^" + std::to_string(2 * g) + " = " + expected.str());

    const auto by_degree = pieces_by_degree(d);
    std::string sums;
    bool ok = true;
    for (unsigned j = 0; j <= 2 * g; ++j) {
        Integer s = 0;
        for (const auto& p : by_degree[j]) s += piece_rank(g, p);
        sums += (j ? "," : "") + s.str();
        if (s != binomial(2 * g, j)) ok = false;
    }
    r.add("per_degree_rank g=" + std::to_string(g), ok, "(" + sums + ")");
    return r;
}

/// Sorted (primitive index, twist) pairs of a piece list.
inline std::vector<std::tuple<unsigned, unsigned>> piece_multiset(const std::vector<MotivePiece>& ps) {
    std::vector<std::tuple<unsigned, unsigned>> keys;
    for (const auto& p : ps) keys.push_back(p.key());
    std::sort(keys.begin(), keys.end());
    return keys;
}

struct LefschetzPairing {
    unsigned degree = 0;           // i
    unsigned target_degree = 0;    // 2g - i
    unsigned twist = 0;            // g - i
    std::vector<MotivePiece> source;
    std::vector<MotivePiece> target_twisted;  // pieces of M^{2g-i}, twisted by (g-i)
    bool matches = false;
};

/// Pairs M^i with M^{2g-i}(g-i) for each i <= g and compares piece multisets.
inline std::vector<LefschetzPairing> hard_lefschetz_pairs(unsigned g) {
    const auto by_degree = pieces_by_degree(kunnemann_decompose(g));
    std::vector<LefschetzPairing> out;
    for (unsigned i = 0; i <= g; ++i) {
        LefschetzPairing pr;
        pr.degree = i;
        pr.target_degree = 2 * g - i;
        pr.twist = g - i;
        pr.source = by_degree[i];
        for (auto p : by_degree[2 * g - i]) {
            if (p.tate_twist < pr.twist) {
                pr.target_twisted.clear();
                break;
            }
            p.tate_twist -= pr.twist;
            p.lefschetz_power = p.tate_twist;
            pr.target_twisted.push_back(p);
        }
        pr.matches = piece_multiset(pr.source) == piece_multiset(pr.target_twisted);
        out.push_back(std::move(pr));
    }
    return out;
}

/// S^{2m,m} smashed with J_i; the image of P^i(-m) in the plus part.
struct PlusPartCell {
    unsigned p = 0;
    unsigned q = 0;
    unsigned j_index = 0;

    friend auto operator<=>(const PlusPartCell&, const PlusPartCell&) = default;
};

inline std::vector<PlusPartCell> plus_part_cells(const MotiveDecomposition& d) {
    std::vector<PlusPartCell> cells;
    cells.reserve(d.pieces.size());
    for (const auto& piece : d.pieces) cells.push_back({2 * piece.tate_twist, piece.tate_twist, piece.primitive_index});
    return cells;
}

/// Tate twists of the summands of the motive of P^m.
inline std::vector<unsigned> projective_space_decomposition(unsigned m) {
    std::vector<unsigned> twists(m + 1);
    for (unsigned i = 0; i <= m; ++i) twists[i] = i;
    return twists;
}

}  // namespace absplit::motive
