#include <doctest.h>

#include <random>

#include "abelcover/surface.hpp"

using namespace abelcover;

namespace {

DivisorClass cls(std::initializer_list<long long> v) {
    return DivisorClass(std::vector<long long>(v));
}

DivisorClass random_class(std::mt19937& rng, int rank, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<long long> c(rank);
    for (auto& x : c)
        x = dist(rng);
    return DivisorClass(c);
}

const BaseSurface& each_computable(int i) {
    static const BaseSurface surfaces[] = {projective_plane(), quadric_product(),
                                           del_pezzo_blowup(1), del_pezzo_blowup(2),
                                           del_pezzo_blowup(3)};
    return surfaces[i];
}
constexpr int kNumComputable = 5;

}  // namespace

TEST_CASE("intersection numbers of the standard bases") {
    auto p2 = projective_plane();
    CHECK(intersect(p2, cls({1}), cls({1})) == 1);

    auto q = quadric_product();
    CHECK(intersect(q, cls({1, 0}), cls({0, 1})) == 1);
    CHECK(intersect(q, cls({1, 0}), cls({1, 0})) == 0);

    auto dp = del_pezzo_blowup(3);
    // (h - e1).(h - e2) = 1
    CHECK(intersect(dp, cls({1, -1, 0, 0}), cls({1, 0, -1, 0})) == 1);
    CHECK(intersect(dp, dp.canonical, dp.canonical) == 6);
}

TEST_CASE("intersect is symmetric and bilinear") {
    std::mt19937 rng(7);
    for (int i = 0; i < kNumComputable; ++i) {
        const BaseSurface& s = each_computable(i);
        for (int trial = 0; trial < 200; ++trial) {
            DivisorClass a = random_class(rng, s.rank);
            DivisorClass b = random_class(rng, s.rank);
            DivisorClass c = random_class(rng, s.rank);
            long long k = trial % 7 - 3;
            CHECK(intersect(s, a, b) == intersect(s, b, a));
            CHECK(intersect(s, a + b * k, c) ==
                  intersect(s, a, c) + k * intersect(s, b, c));
        }
    }
}

TEST_CASE("projective plane cohomology") {
    auto p2 = projective_plane();
    Cohomology quartics = cohomology(p2, cls({4}));
    CHECK(quartics.h0 == 15);
    CHECK(quartics.h1 == 0);
    CHECK(quartics.h2 == 0);
    CHECK(cohomology(p2, cls({-3})).h2 == 1);
    CHECK(cohomology(p2, cls({-1})) == Cohomology{0, 0, 0});
}

TEST_CASE("quadric cohomology via Kunneth") {
    auto q = quadric_product();
    CHECK(cohomology(q, cls({0, -1})) == Cohomology{0, 0, 0});
    CHECK(cohomology(q, cls({-2, 0})) == Cohomology{0, 1, 0});
    CHECK(cohomology(q, cls({2, 3})).h0 == 12);
    CHECK(cohomology(q, cls({-2, -2})).h2 == 1);
}

TEST_CASE("del Pezzo cohomology: pencils and nef classes") {
    auto dp = del_pezzo_blowup(3);
    // F1 + F2 + F3 = 3h - e1 - e2 - e3: cubics through the three points
    DivisorClass f_sum = cls({3, -1, -1, -1});
    CHECK(h0(dp, f_sum) == 7);
    CHECK(cohomology(dp, f_sum).h1 == 0);
    CHECK(cohomology(dp, f_sum).h2 == 0);

    // peeling: exceptional curves are rigid, double lines are empty
    CHECK(h0(dp, cls({0, 1, 0, 0})) == 1);
    CHECK(h0(dp, cls({0, 1, 1, 0})) == 1);
    CHECK(h0(dp, cls({1, -2, 0, 0})) == 0);

    // classes pulled back from the plane: monomial counts survive the blow-up
    for (long long a = 0; a <= 6; ++a)
        CHECK(h0(dp, cls({a, 0, 0, 0})) == (a + 1) * (a + 2) / 2);
}

TEST_CASE("nef tests") {
    CHECK(is_nef(projective_plane(), cls({2})));
    CHECK_FALSE(is_nef(quadric_product(), cls({1, -1})));

    auto dp = del_pezzo_blowup(3);
    CHECK(is_nef(dp, -dp.canonical));
    CHECK_FALSE(is_nef(dp, cls({0, -1, 0, 0})));
    CHECK_FALSE(is_nef(dp, cls({1, -1, -1, -1})));  // negative on h - ei - ej

    // F_1 = dP8: the ruling must constrain the nef cone
    auto f1 = del_pezzo_blowup(1);
    CHECK_FALSE(is_nef(f1, cls({1, -2})));
    CHECK(is_nef(f1, cls({1, -1})));

    CHECK_THROWS_AS(is_nef(declared_surface(1, {{1}}, cls({-3}), 0, 0, {}), cls({1})),
                    InputError);
}

TEST_CASE("nef del Pezzo classes have h0 = chi and no higher cohomology") {
    std::mt19937 rng(11);
    for (int r = 1; r <= 3; ++r) {
        auto dp = del_pezzo_blowup(r);
        int found = 0;
        for (int trial = 0; trial < 500 && found < 60; ++trial) {
            DivisorClass d = random_class(rng, dp.rank, 0, 5);
            for (int i = 1; i <= r; ++i)
                d.c[i] = -d.c[i];
            if (!is_nef(dp, d))
                continue;
            ++found;
            Cohomology c = cohomology(dp, d);
            CHECK(c.h1 == 0);
            CHECK(c.h2 == 0);
            CHECK(c.h0 == chi_riemann_roch(dp, d));
        }
        CHECK(found > 0);
    }
}

TEST_CASE("Euler characteristic agrees with Riemann-Roch everywhere") {
    std::mt19937 rng(13);
    for (int i = 0; i < kNumComputable; ++i) {
        const BaseSurface& s = each_computable(i);
        for (int trial = 0; trial < 300; ++trial) {
            DivisorClass d = random_class(rng, s.rank);
            Cohomology c = cohomology(s, d);
            CHECK(c.h0 - c.h1 + c.h2 == chi_riemann_roch(s, d));
        }
    }
}

TEST_CASE("Serre duality on the computable kinds") {
    std::mt19937 rng(17);
    for (int i = 0; i < kNumComputable; ++i) {
        const BaseSurface& s = each_computable(i);
        for (int trial = 0; trial < 300; ++trial) {
            DivisorClass d = random_class(rng, s.rank);
            Cohomology c = cohomology(s, d);
            Cohomology dual = cohomology(s, s.canonical - d);
            CHECK(c.h2 == dual.h0);
            CHECK(c.h1 == dual.h1);
        }
    }
}

TEST_CASE("declared product: Kunneth over the declared curve bundles") {
    // C x P^1 with C of genus 3 and a nonzero 2-torsion bundle eta
    std::map<std::string, CurveBundle> bundles{{"eta", {0, 0, 2}}, {"kc_eta", {4, 2, 0}}};
    std::map<std::vector<long long>, ProductFactor> factors{
        {{-3, 0}, {"eta", -3}},
        {{1, 4}, {"kc_eta", 1}},
    };
    auto y = declared_product(3, bundles, factors);
    CHECK(y.q == 3);
    CHECK(y.pg == 0);
    CHECK(y.chi_structure() == -2);
    CHECK(intersect(y, y.canonical, y.canonical) == -16);  // K^2 of C x P^1 is 8(g-1)(0-1)

    // h^i(eta x O(-3)) = Kunneth of (0,2) and (0,2)
    Cohomology c = cohomology(y, cls({-3, 0}));
    CHECK(c == Cohomology{0, 0, 4});
    // h^0((K_C + eta) x O(1)) = 2 * 2
    CHECK(cohomology(y, cls({1, 4})).h0 == 4);

    CHECK_THROWS_AS(cohomology(y, cls({2, 2})), UnresolvableCohomology);

    // declared table violating Riemann-Roch on the curve is rejected
    std::map<std::string, CurveBundle> bad{{"eta", {0, 1, 2}}};
    CHECK_THROWS_AS(declared_product(3, bad, {}), SchemaError);
}

TEST_CASE("base point freeness heuristic") {
    CHECK(is_base_point_free(projective_plane(), cls({0})));
    CHECK(is_base_point_free(quadric_product(), cls({0, 2})));
    CHECK_FALSE(is_base_point_free(quadric_product(), cls({-1, 2})));
    CHECK(is_base_point_free(del_pezzo_blowup(3), cls({3, -1, -1, -1})));
    CHECK_FALSE(is_base_point_free(del_pezzo_blowup(3), cls({0, 1, 0, 0})));
}

TEST_CASE("dimension mismatches are rejected") {
    auto p2 = projective_plane();
    CHECK_THROWS_AS(intersect(p2, cls({1, 0}), cls({1})), DimensionMismatch);
    CHECK_THROWS_AS(cohomology(p2, cls({1, 0})), DimensionMismatch);
}
