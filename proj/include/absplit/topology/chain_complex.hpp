#pragma once

#include "absplit/errors.hpp"
#include "absplit/exact/int_matrix.hpp"
#include "absplit/exact/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace absplit::topology {

/**
 * Finite free chain complex C_0 <- C_1 <- ... <- C_top.
 * differential(j) is the matrix of d_j : C_j -> C_{j-1} (rows index C_{j-1}).
 */
class ChainComplex {
public:
    ChainComplex() = default;

    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
        : ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
        if (ranks_.empty()) throw InputError("chain complex needs at least C_0");
        if (diffs_.size() + 1 != ranks_.size())
            throw InputError("chain complex with " + std::to_string(ranks_.size()) + " groups needs " +
                             std::to_string(ranks_.size() - 1) + " differentials");
        for (std::size_t j = 1; j < ranks_.size(); ++j) {
            const auto& d = diffs_[j - 1];
            if (d.rows() != ranks_[j - 1] || d.cols() != ranks_[j])
                throw InputError("d_" + std::to_string(j) + " has shape " + d.shape());
        }
    }

    std::size_t top_degree() const { return ranks_.size() - 1; }
    std::size_t rank(std::size_t j) const { return j < ranks_.size() ? ranks_[j] : 0; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const IntMatrix& differential(std::size_t j) const { return diffs_.at(j - 1); }

    std::size_t total_cells() const {
        std::size_t n = 0;
        for (auto r : ranks_) n += r;
        return n;
    }

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> diffs_;
};

/// d_{j-1} d_j = 0 in every degree.
inline bool squares_to_zero(const ChainComplex& c) {
    for (std::size_t j = 2; j <= c.top_degree(); ++j)
        if (!(c.differential(j - 1) * c.differential(j)).is_zero()) return false;
    return true;
}

/// One 0-cell.
inline ChainComplex point_complex() { return ChainComplex({1}, {}); }

/// Minimal CW circle: one 0-cell, one 1-cell, zero boundary.
inline ChainComplex circle_complex() { return ChainComplex({1, 1}, {IntMatrix(1, 1)}); }

/// Circle with two vertices and two edges v0 -> v1 -> v0.
inline ChainComplex two_cell_circle_complex() { return ChainComplex({2, 2}, {IntMatrix{{-1, 1}, {1, -1}}}); }

/**
 * Tensor product with the Koszul sign d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db.
 * Basis of (A (x) B)_k: blocks A_p (x) B_{k-p} for increasing p, each block in
 * row-major order over (basis of A_p) x (basis of B_{k-p}).
 */
inline ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
    const std::size_t top = a.top_degree() + b.top_degree();
    // offsets[k][p] = position of block A_p (x) B_{k-p} inside C_k
    std::vector<std::vector<std::size_t>> offsets(top + 1, std::vector<std::size_t>(a.top_degree() + 2, 0));
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t k = 0; k <= top; ++k) {
        std::size_t off = 0;
        for (std::size_t p = 0; p <= a.top_degree(); ++p) {
            offsets[k][p] = off;
            if (k >= p) off += a.rank(p) * b.rank(k - p);
        }
        ranks[k] = off;
    }

    std::vector<IntMatrix> diffs;
    for (std::size_t k = 1; k <= top; ++k) {
        IntMatrix d(ranks[k - 1], ranks[k]);
        for (std::size_t p = 0; p <= a.top_degree() && p <= k; ++p) {
            const std::size_t q = k - p;
            if (q > b.top_degree()) continue;
            const std::size_t na = a.rank(p), nb = b.rank(q);
            for (std::size_t ia = 0; ia < na; ++ia)
                for (std::size_t ib = 0; ib < nb; ++ib) {
                    const std::size_t col = offsets[k][p] + ia * nb + ib;
                    if (p >= 1) {  // da (x) b lands in block (p-1, q)
                        const auto& da = a.differential(p);
                        const std::size_t nb_row = b.rank(q);
                        for (std::size_t r = 0; r < a.rank(p - 1); ++r) {
                            if (da(r, ia) == 0) continue;
                            d(offsets[k - 1][p - 1] + r * nb_row + ib, col) += da(r, ia);
                        }
                    }
                    if (q >= 1) {  // (-1)^p a (x) db lands in block (p, q-1)
                        const auto& db = b.differential(q);
                        const std::size_t nb_row = b.rank(q - 1);
                        const int sign = (p % 2 == 0) ? 1 : -1;
                        for (std::size_t r = 0; r < nb_row; ++r) {
                            if (db(r, ib) == 0) continue;
                            d(offsets[k - 1][p] + ia * nb_row + r, col) += sign * db(r, ib);
                        }
                    }
                }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(std::move(ranks), std::move(diffs));
}

/// Direct sum (disjoint union of cell structures), block diagonal differentials.
inline ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    const std::size_t top = std::max(a.top_degree(), b.top_degree());
    std::vector<std::size_t> ranks(top + 1);
    for (std::size_t j = 0; j <= top; ++j) ranks[j] = a.rank(j) + b.rank(j);
    std::vector<IntMatrix> diffs;
    for (std::size_t j = 1; j <= top; ++j) {
        IntMatrix d(ranks[j - 1], ranks[j]);
        if (j <= a.top_degree()) {
            const auto& da = a.differential(j);
            for (std::size_t r = 0; r < da.rows(); ++r)
                for (std::size_t c = 0; c < da.cols(); ++c) d(r, c) = da(r, c);
        }
        if (j <= b.top_degree()) {
            const auto& db = b.differential(j);
            for (std::size_t r = 0; r < db.rows(); ++r)
                for (std::size_t c = 0; c < db.cols(); ++c) d(a.rank(j - 1) + r, a.rank(j) + c) = db(r, c);
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(std::move(ranks), std::move(diffs));
}

inline ChainComplex copies(const ChainComplex& c, std::size_t n) {
    if (n == 0) throw InputError("need at least one copy");
    ChainComplex out = c;
    for (std::size_t i = 1; i < n; ++i) out = direct_sum(out, c);
    return out;
}

/// Cellular model of (S^1)^g x {n points}: n copies of the g-fold tensor power of the minimal circle.
inline ChainComplex product_chain_complex(unsigned g, std::size_t n) {
    if (g == 0) throw InputError("torus dimension must be positive");
    ChainComplex torus = circle_complex();
    for (unsigned i = 1; i < g; ++i) torus = tensor(torus, circle_complex());
    return copies(torus, n);
}

struct Homology {
    std::vector<std::size_t> betti;               // rank H_j
    std::vector<std::vector<Integer>> torsion;    // invariant factors > 1 of H_j

    bool torsion_free() const {
        for (const auto& t : torsion)
            if (!t.empty()) return false;
        return true;
    }
};

/// rank H_j = dim C_j - rank d_j - rank d_{j+1}; torsion of H_j from the SNF of d_{j+1}.
inline Homology homology(const ChainComplex& c) {
    if (!squares_to_zero(c)) throw InvariantError("boundary maps do not square to zero");
    const std::size_t top = c.top_degree();
    std::vector<std::size_t> diff_rank(top + 2, 0);
    std::vector<std::vector<Integer>> factors(top + 2);
    for (std::size_t j = 1; j <= top; ++j) {
        const SmithForm s = smith_normal_form(c.differential(j));
        diff_rank[j] = s.rank();
        for (const auto& d : s.diagonal())
            if (d > 1) factors[j].push_back(d);
    }
    Homology h;
    for (std::size_t j = 0; j <= top; ++j) {
        h.betti.push_back(c.rank(j) - diff_rank[j] - diff_rank[j + 1]);
        h.torsion.push_back(factors[j + 1]);
    }
    return h;
}

inline std::vector<std::size_t> homology_ranks(const ChainComplex& c) { return homology(c).betti; }

}  // namespace absplit::topology
