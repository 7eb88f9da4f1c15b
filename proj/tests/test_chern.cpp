#include <ruledwall/chern.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ruledwall;

namespace {

const SurfaceData S23 = SurfaceData::ruled(2, 3);

Gamma G(long r, Rational a, Rational b, Rational d) { return Gamma{r, DivClass(a, b), d}; }

}  // namespace

TEST(Chern, GammaOf) {
    auto g = gamma_of(S23, ChernData(2, DivClass(1, 0), 1));
    EXPECT_EQ(g.mu, DivClass(make_rational(1, 2), 0));
    EXPECT_EQ(g.Delta, make_rational(7, 8));
    EXPECT_EQ(gamma_of(S23, ChernData(1, DivClass(3, -5), 4)).Delta, 4);

    auto p2like = SurfaceData::abstract({{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}}, DivClass(-3, 0), 1);
    EXPECT_EQ(discriminant(p2like, ChernData(3, DivClass(1, 0), 2)), make_rational(5, 9));
}

TEST(Chern, ChernOf) {
    EXPECT_EQ(chern_of(S23, G(2, make_rational(1, 2), 0, make_rational(7, 8))), ChernData(2, DivClass(1, 0), 1));
    EXPECT_EQ(chern_of(S23, G(1, 2, -1, 5)), ChernData(1, DivClass(2, -1), 5));
    EXPECT_THROW(chern_of(S23, G(2, make_rational(1, 2), 0, make_rational(1, 3))), Error);
    EXPECT_THROW(chern_of(S23, G(2, make_rational(1, 3), 0, 0)), Error);
}

TEST(Chern, Validation) {
    EXPECT_THROW(ChernData(0, DivClass(0, 0), 0), Error);
    EXPECT_THROW(ChernData(2, DivClass(make_rational(1, 2), 0), 0), Error);
    EXPECT_EQ(key_of(ChernData(2, DivClass(1, -3), 4)), "2;1,-3;4");
}

TEST(Chern, Extension) {
    auto tot = delta_of_extension(S23, G(1, 1, -1, 0), G(1, 0, 1, 0));
    EXPECT_EQ(tot, G(2, make_rational(1, 2), 0, make_rational(7, 8)));
    auto same = G(2, make_rational(1, 2), 3, make_rational(5, 8));
    EXPECT_EQ(delta_of_extension(S23, same, same), G(4, make_rational(1, 2), 3, make_rational(5, 8)));
    auto eq = delta_of_extension(S23, G(1, 1, 0, 2), G(3, 1, 0, 1));
    EXPECT_EQ(eq.Delta, make_rational(2 + 3, 4));
}

TEST(Chern, ThreePartFiltration) {
    std::vector<Gamma> parts{G(1, 1, -1, 0), G(1, 0, 0, 0), G(1, 0, 1, 0)};
    // Whitney oracle on the full flag.
    auto L = oracle::ruled_lattice(2, 3);
    auto total = oracle::whitney(L, {{1, 1, -1, 0}, {1, 0, 0, 0}, {1, 0, 1, 0}});
    EXPECT_EQ(total.c2, 1);
    Rational want = L.delta({total.r, total.a, total.b, total.c2});
    EXPECT_EQ(want, make_rational(2, 3));
    Gamma g = delta_of_filtration(S23, parts);
    EXPECT_EQ(g, G(3, make_rational(1, 3), 0, want));
    EXPECT_EQ(filtration_discriminant(S23, parts), want);
}

TEST(ChernProperty, RoundTripsAndWhitney) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> small(-4, 4), rank(1, 4), genus(0, 3), ee(0, 6);
    for (int i = 0; i < 400; ++i) {
        auto s = SurfaceData::ruled(genus(rng), ee(rng));
        auto L = oracle::ruled_lattice(s.g(), s.e());
        ChernData c(rank(rng), DivClass(small(rng), small(rng)), small(rng));
        EXPECT_EQ(chern_of(s, gamma_of(s, c)), c);
        EXPECT_EQ(gamma_of(s, c).Delta, L.delta({c.r(), to_long(c.c1().a.get_num()), to_long(c.c1().b.get_num()),
                                                 to_long(c.c2())}));

        std::size_t n = 2 + rng() % 3;
        std::vector<oracle::Part> raw;
        std::vector<Gamma> gammas;
        for (std::size_t k = 0; k < n; ++k) {
            oracle::Part p{rank(rng), small(rng), small(rng), small(rng)};
            raw.push_back(p);
            gammas.push_back(gamma_of(s, ChernData(p.r, DivClass(p.a, p.b), p.c2)));
        }
        Gamma folded = delta_of_filtration(s, gammas);
        auto w = oracle::whitney(L, raw);
        EXPECT_EQ(chern_of(s, folded), ChernData(w.r, DivClass(w.a, w.b), w.c2));
        EXPECT_EQ(filtration_discriminant(s, gammas), folded.Delta);
        // Re-bracketing: fold the tail first.
        Gamma tail = delta_of_filtration(s, std::span<const Gamma>(gammas).subspan(1));
        EXPECT_EQ(delta_of_extension(s, gammas[0], tail), folded);
    }
}

TEST(ChernProperty, CorrectionSignOnWall) {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto s = SurfaceData::ruled(rng() % 3, 1 + rng() % 5);
        Rational x = s.e() + make_rational(1 + rng() % 20, 1 + rng() % 5);
        // xi orthogonal to H_x: xi = t (1, e - x).
        Rational t = make_rational(1 + rng() % 7, 1 + rng() % 3);
        DivClass xi(t, t * (Rational(s.e()) - x));
        EXPECT_EQ(intersect(s, xi, slice_class(x)), 0);
        EXPECT_LT(square(s, xi), 0);
    }
}
