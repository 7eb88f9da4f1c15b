#include <ruledwall/strata.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ruledwall;

namespace {

const SurfaceData S23 = SurfaceData::ruled(2, 3);
const ChernData C1(2, DivClass(1, 0), 1);
const ChernData P(1, DivClass(0, 1), 0);
const ChernData Q(1, DivClass(1, -1), 0);

Wall wall_at(const SurfaceData& s, const ChernData& c, const Rational& x) {
    for (const Wall& w : enumerate_walls(s, c, s.e()))
        if (w.x == x) return w;
    throw Error("no wall");
}

}  // namespace

TEST(Strata, Codim) {
    EXPECT_EQ(codim(S23, HNType{{P, Q}}), 9);
    EXPECT_EQ(codim(S23, HNType{{Q, P}}), 0);
    EXPECT_THROW(codim(S23, HNType{{C1}}), Error);

    auto k3 = SurfaceData::abstract({{{Integer(-4), Integer(0)}, {Integer(0), Integer(0)}}}, DivClass(0, 0), 2);
    HNType t{{ChernData(1, DivClass(0, 0), 0), ChernData(1, DivClass(1, 0), 0)}};
    oracle::Lattice L{-4, 0, 0, 0, 0, 2};
    EXPECT_EQ(codim(k3, t), oracle::codim(L, {{1, 0, 0, 0}, {1, 1, 0, 0}}));
    EXPECT_EQ(codim(k3, t), 0);
}

TEST(Strata, MinCodim) {
    Wall w = wall_at(S23, C1, 5);
    EXPECT_EQ(min_codim_at(S23, C1, w, Side::below), Rational(9));
    EXPECT_EQ(min_codim_at(S23, C1, w, Side::above), Rational(0));
}

TEST(Strata, PositivityReport) {
    Wall w = wall_at(S23, C1, 5);
    auto rep = check_positivity(S23, C1, w);
    ASSERT_EQ(rep.types.size(), 1u);
    const auto& t = rep.types[0];
    EXPECT_EQ(t.d, 9);
    ASSERT_EQ(t.pairs.size(), 1u);
    EXPECT_EQ(t.pairs[0].a, 1);
    EXPECT_EQ(t.pairs[0].b, 2);
    EXPECT_EQ(t.pairs[0].canonical, make_rational(9, 2));
    EXPECT_EQ(t.pairs[0].total, 9);
    EXPECT_TRUE(t.at_least_2);
    EXPECT_TRUE(t.at_least_3);
    EXPECT_TRUE(rep.warnings.empty());
    EXPECT_THROW(check_positivity(SurfaceData::ruled(0, 1), C1, w), Error);
    EXPECT_THROW(check_positivity(SurfaceData::ruled(2, 2), C1, w), Error);
}

TEST(Strata, GenusOneUnitPair) {
    // Search the genus-1, e = 1 sweep for a minus-side pair with a = b = 1.
    auto s = SurfaceData::ruled(1, 1);
    bool found = false;
    for (long r = 2; r <= 3 && !found; ++r)
        for (long a = -2; a <= 2 && !found; ++a)
            for (long b = -2; b <= 2 && !found; ++b)
                for (long c2 = 0; c2 <= 4 && !found; ++c2) {
                    ChernData c(r, DivClass(a, b), c2);
                    for (const Wall& w : enumerate_walls(s, c, 1))
                        for (const auto& t : check_positivity(s, c, w).types)
                            if (t.pairs.size() == 1 && t.pairs[0].a == 1 && t.pairs[0].b == 1 && t.parts_exist) {
                                found = true;
                                std::vector<oracle::Part> raw;
                                for (const auto& p : t.type.parts)
                                    raw.push_back({p.r(), to_long(p.c1().a.get_num()), to_long(p.c1().b.get_num()),
                                                   to_long(p.c2())});
                                EXPECT_EQ(t.d, oracle::codim(oracle::ruled_lattice(1, 1), raw));
                                EXPECT_GE(t.d, 3);
                            }
                }
    EXPECT_TRUE(found);
}

TEST(StrataProperty, CodimMatchesOracleAndReversal) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> small(-3, 3), rank(1, 3);
    for (int i = 0; i < 500; ++i) {
        long g = rng() % 4, e = rng() % 7;
        auto s = SurfaceData::ruled(g, e);
        auto L = oracle::ruled_lattice(g, e);
        std::size_t n = 2 + rng() % 2;
        std::vector<oracle::Part> raw;
        HNType t;
        for (std::size_t k = 0; k < n; ++k) {
            oracle::Part p{rank(rng), small(rng), small(rng), small(rng)};
            raw.push_back(p);
            t.parts.emplace_back(p.r, DivClass(p.a, p.b), p.c2);
        }
        EXPECT_EQ(codim(s, t), oracle::codim(L, raw));
        if (n == 2) {
            const ChernData& a = t.parts[0];
            const ChernData& b = t.parts[1];
            DivClass xi = slope(b) - slope(a);
            Rational rr = a.r() * b.r();
            EXPECT_EQ(codim(s, t) - codim(s, t.reversed()), -rr * (hilbert_P(s, xi) - hilbert_P(s, -xi)));
            EXPECT_EQ(codim(s, t) - codim(s, t.reversed()), rr * intersect(s, xi, s.K()));
        }
    }
}

TEST(StrataProperty, KTrivialSymmetry) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> small(-3, 3), rank(1, 3);
    for (int i = 0; i < 200; ++i) {
        Integer g00 = small(rng), g01 = small(rng), g11 = small(rng);
        auto s = SurfaceData::abstract({{{g00, g01}, {g01, g11}}}, DivClass(0, 0), small(rng));
        HNType t{{ChernData(rank(rng), DivClass(small(rng), small(rng)), small(rng)),
                  ChernData(rank(rng), DivClass(small(rng), small(rng)), small(rng))}};
        EXPECT_EQ(codim(s, t), codim(s, t.reversed()));
    }
}
