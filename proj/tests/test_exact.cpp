#include "absplit/exact/combinatorics.hpp"
#include "absplit/exact/int_matrix.hpp"
#include "absplit/exact/smith.hpp"
#include "absplit/exact/truncated_poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace absplit;

namespace {

TruncatedPoly P(std::size_t order, std::initializer_list<Rational> c) { return TruncatedPoly(order, c); }

TruncatedPoly random_poly(std::mt19937_64& rng, std::size_t order, bool nilpotent) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = (k == 0 && nilpotent) ? Rational(0) : Rational(num(rng), den(rng));
    return TruncatedPoly(order, c);
}

// Number of set partitions of {0..m-1} into exactly k blocks, by restricted growth strings.
long long brute_stirling2(unsigned m, unsigned k) {
    if (m == 0) return k == 0 ? 1 : 0;
    std::vector<unsigned> a(m, 0);
    long long count = 0;
    for (;;) {
        unsigned blocks = 0;
        for (unsigned x : a) blocks = std::max(blocks, x + 1);
        if (blocks == k) ++count;
        // next restricted growth string
        int i = static_cast<int>(m) - 1;
        while (i > 0) {
            unsigned mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) {
                ++a[i];
                for (unsigned j = i + 1; j < m; ++j) a[j] = 0;
                break;
            }
            --i;
        }
        if (i == 0) break;
    }
    return count;
}

// Coefficients of x(x-1)...(x-k+1) by direct polynomial expansion.
std::vector<long long> falling_factorial_coeffs(unsigned k) {
    std::vector<long long> c{1};
    for (unsigned i = 0; i < k; ++i) {
        std::vector<long long> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= static_cast<long long>(i) * c[j];
        }
        c = next;
    }
    return c;
}

}  // namespace

TEST(TruncatedPoly, MulExamples) {
    EXPECT_EQ(poly_mul(P(2, {1}), P(2, {0, 1})), P(2, {0, 1}));
    EXPECT_EQ(poly_mul(P(2, {0, 1}), P(2, {0, 1})), P(2, {0, 0, 1}));
    EXPECT_EQ(poly_mul(P(2, {1, 1}), P(2, {1, -1, 1})), P(2, {1}));
}

TEST(TruncatedPoly, MulRejectsMismatchedOrders) {
    EXPECT_THROW(poly_mul(P(2, {1}), P(3, {1})), OrderMismatch);
    EXPECT_THROW(P(2, {1}) + P(1, {1}), OrderMismatch);
}

TEST(TruncatedPoly, ConstructorRejectsOverflowingCoefficients) {
    EXPECT_THROW(P(1, {0, 0, 1}), InputError);
    EXPECT_NO_THROW(P(1, {0, 1, 0}));
}

TEST(TruncatedPoly, Log1pExamples) {
    EXPECT_EQ(poly_log1p(P(2, {0, 1})), P(2, {0, 1, Rational(-1, 2)}));
    EXPECT_EQ(poly_log1p(TruncatedPoly(2)), TruncatedPoly(2));
    EXPECT_EQ(poly_log1p(P(2, {0, 2, 1})), P(2, {0, 2, -1}));
}

TEST(TruncatedPoly, ExpExamples) {
    EXPECT_EQ(poly_exp(TruncatedPoly(2)), P(2, {1}));
    EXPECT_EQ(poly_exp(P(2, {0, 1, Rational(-1, 2)})), P(2, {1, 1}));
    EXPECT_EQ(poly_exp(P(2, {0, 1})), P(2, {1, 1, Rational(1, 2)}));
}

TEST(TruncatedPoly, SeriesRejectNonNilpotent) {
    EXPECT_THROW(poly_log1p(P(2, {1, 1})), DomainError);
    EXPECT_THROW(poly_exp(P(2, {Rational(1, 3)})), DomainError);
}

TEST(TruncatedPoly, RingAxiomsRandomized) {
    std::mt19937_64 rng(20261017);
    for (int t = 0; t < 40; ++t) {
        const std::size_t order = 1 + t % 9;
        const auto a = random_poly(rng, order, false), b = random_poly(rng, order, false), c = random_poly(rng, order, false);
        EXPECT_EQ(poly_mul(poly_mul(a, b), c), poly_mul(a, poly_mul(b, c)));
        EXPECT_EQ(poly_mul(a, b), poly_mul(b, a));
        EXPECT_EQ(poly_mul(a, b + c), poly_mul(a, b) + poly_mul(a, c));
    }
}

TEST(TruncatedPoly, ExpLogRoundTripUpToOrder12) {
    std::mt19937_64 rng(99);
    for (std::size_t order = 1; order <= 12; ++order)
        for (int t = 0; t < 3; ++t) {
            const auto q = random_poly(rng, order, true);
            const auto one = TruncatedPoly::one(order);
            EXPECT_EQ(poly_exp(poly_log1p(q)), one + q) << "order " << order;
            EXPECT_EQ(poly_log1p(poly_exp(q) - one), q) << "order " << order;
        }
}

TEST(TruncatedPoly, ComposeMatchesSubstitution) {
    // a(u) = 1 + 2u + 3u^2, q = u + u^2 at order 3: 1 + 2u + 5u^2 + 6u^3
    EXPECT_EQ(poly_compose(P(3, {1, 2, 3}), P(3, {0, 1, 1})), P(3, {1, 2, 5, 6}));
    EXPECT_THROW(poly_compose(P(3, {1}), P(3, {1, 1})), DomainError);
}

TEST(Combinatorics, BinomialExamples) {
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(-1, 3), -1);
    EXPECT_EQ(binomial(3, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(-2, 2), 3);
}

TEST(Combinatorics, PascalRecurrenceGrid) {
    for (int n = -20; n <= 20; ++n)
        for (unsigned k = 1; k <= 20; ++k)
            ASSERT_EQ(binomial(n + 1, k), binomial(n, k) + binomial(n, k - 1)) << n << "," << k;
}

TEST(Combinatorics, StirlingSecondMatchesPartitionEnumeration) {
    EXPECT_EQ(stirling_second(2, 1), 1);
    EXPECT_EQ(stirling_second(2, 2), 1);
    for (unsigned m = 0; m <= 8; ++m)
        for (unsigned k = 0; k <= m + 1; ++k) EXPECT_EQ(stirling_second(m, k), brute_stirling2(m, k)) << m << "," << k;
}

TEST(Combinatorics, StirlingFirstMatchesFallingFactorial) {
    EXPECT_EQ(stirling_first_signed(3, 1), 2);
    EXPECT_EQ(stirling_first_signed(3, 2), -3);
    for (unsigned k = 0; k <= 12; ++k) {
        const auto c = falling_factorial_coeffs(k);
        for (unsigned l = 0; l <= k; ++l) EXPECT_EQ(stirling_first_signed(k, l), c[l]) << k << "," << l;
    }
}

TEST(Combinatorics, StirlingOrthogonality) {
    Integer probe = 0;
    for (unsigned k = 0; k <= 3; ++k) probe += stirling_second(3, k) * stirling_first_signed(k, 2);
    EXPECT_EQ(probe, 0);
    for (unsigned m = 0; m <= 12; ++m)
        for (unsigned l = 0; l <= 12; ++l) {
            Integer s = 0;
            for (unsigned k = 0; k <= 12; ++k) s += stirling_second(m, k) * stirling_first_signed(k, l);
            EXPECT_EQ(s, m == l ? 1 : 0) << m << "," << l;
        }
}

TEST(Combinatorics, PrimesAndTotient) {
    EXPECT_EQ(primes_up_to(10), (std::vector<unsigned>{2, 3, 5, 7}));
    EXPECT_TRUE(primes_up_to(1).empty());
    EXPECT_EQ(euler_phi(12), 4u);
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(91));
}

namespace {

void expect_valid_smith(const IntMatrix& a) {
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.U * a * s.V, s.D);
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) {
                EXPECT_EQ(s.D(i, j), 0);
            }
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        EXPECT_GE(d[i], 0);
        if (i + 1 < d.size()) {
            if (d[i] == 0) {
                EXPECT_EQ(d[i + 1], 0);
            } else {
                EXPECT_EQ(d[i + 1] % d[i], 0);
            }
        }
    }
    if (a.rows() == a.cols()) {
        Integer prod = 1;
        for (const auto& x : d) prod *= x;
        EXPECT_EQ(abs(determinant(a)), prod);
    }
}

}  // namespace

TEST(Smith, Examples) {
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(2)).D, IntMatrix::identity(2));
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).D, (IntMatrix{{2, 0}, {0, 4}}));
    EXPECT_EQ(smith_normal_form(IntMatrix(3, 2)).D, IntMatrix(3, 2));
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal(), (std::vector<Integer>{1, 6}));
}

TEST(Smith, RandomizedReverification) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> dim(1, 7), entry(-20, 20);
    for (int t = 0; t < 60; ++t) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (t % 3 == 0 && entry(rng) > 5) ? 0 : entry(rng);
        expect_valid_smith(m);
    }
}

TEST(Smith, RankDeficientAndEmpty) {
    expect_valid_smith(IntMatrix{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    EXPECT_EQ(smith_normal_form(IntMatrix{{1, 2, 3}, {2, 4, 6}}).rank(), 1u);
    const SmithForm empty = smith_normal_form(IntMatrix(0, 3));
    EXPECT_EQ(empty.rank(), 0u);
    EXPECT_EQ(empty.V, IntMatrix::identity(3));
}

TEST(IntMatrix, DeterminantAndShapes) {
    EXPECT_EQ(determinant(IntMatrix{{2, 1}, {7, 4}}), 1);
    EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
    EXPECT_THROW(IntMatrix(2, 3) * IntMatrix(2, 3), InputError);
    EXPECT_THROW(determinant(IntMatrix(2, 3)), InputError);
}
