#pragma once

#include "absplit/exact/int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace absplit {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        const std::size_t r = std::min(D.rows(), D.cols());
        for (std::size_t i = 0; i < r; ++i) d.push_back(D(i, i));
        return d;
    }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : diagonal())
            if (d != 0) ++r;
        return r;
    }
};

namespace detail {

inline std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntMatrix& m, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Integer& e = m(i, j);
            if (e == 0) continue;
            Integer a = abs(e);
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
                if (best_abs == 1) return best;
            }
        }
    return best;
}

}  // namespace detail

/**
 * Smith normal form by elementary row/column operations. Each round moves the
 * entry of least absolute value to the pivot, which keeps intermediate entries
 * small; the pivot row/column is cleared by truncated division and the round is
 * repeated while remainders survive. Divisibility of the trailing block is then
 * forced by folding an offending row into the pivot row.
 */
inline SmithForm smith_normal_form(const IntMatrix& a) {
    IntMatrix D = a;
    IntMatrix U = IntMatrix::identity(a.rows());
    IntMatrix V = IntMatrix::identity(a.cols());
    const std::size_t steps = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            auto pivot = detail::smallest_nonzero(D, t);
            if (!pivot) return {std::move(U), std::move(D), std::move(V)};
            auto [pi, pj] = *pivot;
            D.swap_rows(t, pi);
            U.swap_rows(t, pi);
            D.swap_cols(t, pj);
            V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                if (D(i, t) == 0) continue;
                const Integer q = D(i, t) / D(t, t);
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                if (D(t, j) == 0) continue;
                const Integer q = D(t, j) / D(t, t);
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < D.rows() && !offending; ++i)
                for (std::size_t j = t + 1; j < D.cols(); ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        offending = i;
                        break;
                    }
            if (offending) {
                D.add_row(t, *offending, 1);
                U.add_row(t, *offending, 1);
                continue;
            }
            if (D(t, t) < 0) {
                D.negate_row(t);
                U.negate_row(t);
            }
            break;
        }
    }
    return {std::move(U), std::move(D), std::move(V)};
}

}  // namespace absplit
