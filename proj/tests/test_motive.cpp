#include "absplit/motive/kunnemann.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace absplit;
using namespace absplit::motive;

namespace {

using Key = std::tuple<unsigned, unsigned>;

std::multiset<Key> keys_of(const std::vector<MotivePiece>& ps) {
    std::multiset<Key> s;
    for (const auto& p : ps) s.insert(p.key());
    return s;
}

// sl2 strings (lowest degree, length) of the cohomology of a g-dimensional
// torus, built as the g-fold tensor power of the elliptic curve's strings
// {(0,2), (1,1), (1,1)} via Clebsch-Gordan. L moves up two degrees.
std::map<Key, unsigned> torus_strings(unsigned g) {
    std::map<Key, unsigned> cur{{{0u, 1u}, 1u}};
    const std::map<Key, unsigned> curve{{{0u, 2u}, 1u}, {{1u, 1u}, 2u}};
    for (unsigned step = 0; step < g; ++step) {
        std::map<Key, unsigned> next;
        for (const auto& [a, ma] : cur)
            for (const auto& [b, mb] : curve) {
                const auto [da, la] = a;
                const auto [db, lb] = b;
                for (unsigned k = 0; k < std::min(la, lb); ++k)
                    next[{da + db + 2 * k, la + lb - 1 - 2 * k}] += ma * mb;
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

TEST(Kunnemann, GenusOnePieces) {
    const auto d = kunnemann_decompose(1);
    EXPECT_EQ(keys_of(d.pieces), (std::multiset<Key>{{0, 0}, {0, 1}, {1, 0}}));
}

TEST(Kunnemann, GenusTwoPieces) {
    const auto d = kunnemann_decompose(2);
    EXPECT_EQ(keys_of(d.pieces), (std::multiset<Key>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
    for (const auto& p : d.pieces) EXPECT_EQ(p.lefschetz_power, p.tate_twist);
}

TEST(Kunnemann, PieceCount) {
    for (unsigned g = 0; g <= 12; ++g) {
        EXPECT_EQ(kunnemann_decompose(g).pieces.size(), kunnemann_piece_count(g));
        EXPECT_EQ(kunnemann_piece_count(g), (g + 1) * (g + 2) / 2);
    }
}

TEST(Kunnemann, EachPrimitiveCarriesFullLefschetzString) {
    for (unsigned g = 1; g <= 8; ++g) {
        std::multiset<Key> expected;
        for (unsigned p = 0; p <= g; ++p)
            for (unsigned k = 0; k <= g - p; ++k) expected.insert({p, k});
        EXPECT_EQ(keys_of(kunnemann_decompose(g).pieces), expected) << "g=" << g;
    }
}

TEST(PrimitiveRank, Examples) {
    EXPECT_EQ(primitive_rank(1, 0), 1);
    EXPECT_EQ(primitive_rank(1, 1), 2);
    EXPECT_EQ(primitive_rank(2, 2), 5);
    EXPECT_EQ(primitive_rank(3, 3), 14);
    EXPECT_THROW(primitive_rank(2, 3), InputError);
}

TEST(PrimitiveRank, MatchesSl2Oracle) {
    for (unsigned g = 1; g <= 8; ++g) {
        const auto strings = torus_strings(g);
        std::map<unsigned, Integer> by_low;
        for (const auto& [k, mult] : strings) {
            const auto [low, len] = k;
            EXPECT_EQ(low + 2 * (len - 1), 2 * g - low) << "strings are centred at g";
            by_low[low] += mult;
        }
        for (unsigned i = 0; i <= g; ++i) EXPECT_EQ(primitive_rank(g, i), by_low[i]) << "g=" << g << " i=" << i;
        EXPECT_EQ(by_low.size(), g + 1u);
    }
}

TEST(RankConservation, Examples) {
    const auto r = rank_conservation(kunnemann_decompose(2));
    EXPECT_TRUE(r.passed());
    const Check* per = r.find("per_degree_rank g=2");
    ASSERT_NE(per, nullptr);
    EXPECT_EQ(per->detail, "(1,4,6,4,1)");
    EXPECT_EQ(r.find("total_rank g=2")->detail, "sum 16, expected 2^4 = 16");
}

TEST(RankConservation, HoldsUpToGenusEight) {
    for (unsigned g = 0; g <= 8; ++g) EXPECT_TRUE(rank_conservation(kunnemann_decompose(g)).passed()) << "g=" << g;
}

TEST(RankConservation, DetectsMissingPiece) {
    auto d = kunnemann_decompose(3);
    d.pieces.pop_back();
    EXPECT_FALSE(rank_conservation(d).passed());
}

TEST(Regrouping, DegreeJPieces) {
    for (unsigned g = 1; g <= 8; ++g) {
        const auto by = pieces_by_degree(kunnemann_decompose(g));
        ASSERT_EQ(by.size(), 2 * g + 1);
        for (unsigned j = 0; j <= 2 * g; ++j) {
            std::multiset<Key> expected;
            for (unsigned k = (j > g ? j - g : 0); k <= j / 2; ++k) expected.insert({j - 2 * k, k});
            EXPECT_EQ(keys_of(by[j]), expected) << "g=" << g << " j=" << j;
        }
    }
}

TEST(HardLefschetz, Examples) {
    const auto pairs = hard_lefschetz_pairs(2);
    ASSERT_EQ(pairs.size(), 3u);
    EXPECT_EQ(pairs[0].target_degree, 4u);
    EXPECT_EQ(pairs[0].twist, 2u);
    EXPECT_EQ(keys_of(pairs[0].source), (std::multiset<Key>{{0, 0}}));
    EXPECT_EQ(keys_of(pairs[1].target_twisted), (std::multiset<Key>{{1, 0}}));
    EXPECT_EQ(keys_of(pairs[2].source), (std::multiset<Key>{{2, 0}, {0, 1}}));
    for (const auto& p : pairs) EXPECT_TRUE(p.matches);
}

TEST(HardLefschetz, HoldsUpToGenusEight) {
    for (unsigned g = 1; g <= 8; ++g)
        for (const auto& p : hard_lefschetz_pairs(g)) EXPECT_TRUE(p.matches) << "g=" << g << " i=" << p.degree;
}

TEST(PlusPart, CellsFromPieces) {
    const auto cells = plus_part_cells(kunnemann_decompose(2));
    const std::multiset<PlusPartCell> got(cells.begin(), cells.end());
    EXPECT_EQ(got.count({4, 2, 0}), 1u);
    EXPECT_EQ(got.count({0, 0, 0}), 1u);
    EXPECT_EQ(got.count({2, 1, 1}), 1u);
    EXPECT_EQ(got.count({0, 0, 2}), 1u);
    EXPECT_EQ(got.size(), 6u);
}

TEST(PlusPart, ZerothIndexCarriesUnitAndTopCell) {
    for (unsigned g = 1; g <= 6; ++g) {
        const auto cells = plus_part_cells(kunnemann_decompose(g));
        std::multiset<PlusPartCell> j0;
        for (const auto& c : cells) {
            EXPECT_EQ(c.p, 2 * c.q);
            if (c.j_index == 0) j0.insert(c);
        }
        EXPECT_EQ(j0.count({0, 0, 0}), 1u);
        EXPECT_EQ(j0.count({2 * g, g, 0}), 1u);
        EXPECT_EQ(j0.size(), g + 1u);
    }
}

TEST(ProjectiveSpace, Twists) {
    EXPECT_EQ(projective_space_decomposition(0), (std::vector<unsigned>{0}));
    EXPECT_EQ(projective_space_decomposition(3), (std::vector<unsigned>{0, 1, 2, 3}));
}
