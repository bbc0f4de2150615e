#include "doctest.h"
#include <stdexcept>
#include "flift/fan.hpp"

using namespace flift;

TEST_CASE("smoothness") {
    CHECK(is_smooth(Fan::projective_space(2)));
    CHECK(is_smooth(Fan::projective_space(3)));
    CHECK(is_smooth(Fan::hirzebruch(0)));
    CHECK(is_smooth(Fan::hirzebruch(3)));
    // cone spanned by (1,0),(1,2) has determinant 2
    Fan nonsmooth(2, {{1, 0}, {1, 2}}, {{0, 1}});
    CHECK(!is_smooth(nonsmooth));
}

TEST_CASE("completeness") {
    CHECK(is_complete(Fan::product_p1(2)));
    CHECK(is_complete(Fan::projective_space(1)));
    CHECK(is_complete(Fan::projective_space(3)));
    CHECK(is_complete(Fan::product_p1(3)));
    CHECK(!is_complete(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}})));   // a quadrant
    CHECK(!is_complete(Fan::affine_line()));
}

TEST_CASE("fan validation") {
    CHECK_THROWS_AS(Fan(2, {{2, 0}, {0, 1}}, {{0, 1}}), std::invalid_argument);  // imprimitive
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {1, 0}}, {{0}, {1}}), std::invalid_argument);  // dup
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {-1, 0}}, {{0, 1}}), std::invalid_argument);  // dependent
    // a ray interior to another cone
    CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {2}}), std::invalid_argument);
}

TEST_CASE("star subdivision") {
    SUBCASE("P^2 at a corner gives F_1") {
        Fan f1 = star_subdivision(Fan::projective_space(2), {0, 1});
        CHECK(f1.ray_count() == 4);
        CHECK(is_smooth(f1));
        CHECK(is_complete(f1));
        CHECK(fan_isomorphism(f1, Fan::hirzebruch(1)).has_value());
        CHECK(!fan_isomorphism(f1, Fan::hirzebruch(0)).has_value());
    }
    SUBCASE("F_0 at any maximal cone: 5 rays, still smooth complete") {
        Fan f = Fan::hirzebruch(0);
        Fan sub = star_subdivision(f, f.max_cones()[0]);
        CHECK(sub.ray_count() == 5);
        CHECK(is_smooth(sub));
        CHECK(is_complete(sub));
    }
    SUBCASE("k subdivisions add k rays and preserve smooth/complete") {
        Fan f = Fan::projective_space(2);
        int base = f.ray_count();
        std::vector<std::set<int>> corners = {{0, 1}, {1, 2}, {0, 2}};
        for (int k = 0; k < 3; ++k) {
            f = star_subdivision(f, corners[k]);
            CHECK(f.ray_count() == base + k + 1);
            CHECK(is_smooth(f));
            CHECK(is_complete(f));
        }
    }
    SUBCASE("non-cone rejected") {
        CHECK_THROWS_AS(star_subdivision(Fan::projective_space(2), {0, 1, 2}),
                        std::invalid_argument);
    }
}

TEST_CASE("fan automorphisms") {
    SUBCASE("P^2: order 6") {
        auto g = fan_automorphisms(Fan::projective_space(2));
        CHECK(g.order() == 6);
    }
    SUBCASE("P^1 x P^1: order 8") {
        auto g = fan_automorphisms(Fan::product_p1(2));
        CHECK(g.order() == 8);
    }
    SUBCASE("F_2: order 2") {
        auto g = fan_automorphisms(Fan::hirzebruch(2));
        CHECK(g.order() == 2);
    }
    SUBCASE("F_1: order 2") {
        auto g = fan_automorphisms(Fan::hirzebruch(1));
        CHECK(g.order() == 2);
    }
    SUBCASE("P^3: the symmetric group on four rays") {
        auto g = fan_automorphisms(Fan::projective_space(3));
        CHECK(g.order() == 24);
    }
    SUBCASE("(P^1)^3: signed permutations of the cube") {
        auto g = fan_automorphisms(Fan::product_p1(3));
        CHECK(g.order() == 48);
    }
    SUBCASE("hexagonal del Pezzo: dihedral of order 12") {
        auto g = fan_automorphisms(Fan::del_pezzo(3));
        CHECK(g.order() == 12);
    }
    SUBCASE("group closure and inverses") {
        auto g = fan_automorphisms(Fan::projective_space(2));
        auto find = [&](const ZMat& m) {
            for (const auto& x : g.matrices)
                if (x == m) return true;
            return false;
        };
        for (const auto& a : g.matrices)
            for (const auto& b : g.matrices) {
                ZMat ab(2, ZVec(2, 0));
                for (int i = 0; i < 2; ++i)
                    for (int k = 0; k < 2; ++k)
                        for (int j = 0; j < 2; ++j) ab[i][j] += a[i][k] * b[k][j];
                CHECK(find(ab));
            }
        CHECK(find(ZMat{{1, 0}, {0, 1}}));
    }
}

TEST_CASE("multiplication by p witness") {
    const Field* F = Field::get(3);
    SUBCASE("affine line: one standard chart") {
        auto w = multiplication_by_p_witness(Fan::affine_line(), F);
        CHECK(w.cones_preserved);
        REQUIRE(w.charts.size() == 1);
        CHECK(w.charts[0].images()[0].is_zero());
    }
    SUBCASE("P^2: three standard charts, det xi = boundary on each") {
        auto w = multiplication_by_p_witness(Fan::projective_space(2), F);
        CHECK(w.cones_preserved);
        REQUIRE(w.charts.size() == 3);
        for (const auto& chart : w.charts) {
            Poly d = chart_det_xi(chart);
            Poly expect = Poly::constant(F, 2, 1);
            for (int i = 0; i < 2; ++i) expect *= Poly::variable(F, 2, i).pow(F->p() - 1);
            CHECK(d == expect);
        }
    }
    SUBCASE("F_1: four standard charts") {
        auto w = multiplication_by_p_witness(Fan::hirzebruch(1), F);
        CHECK(w.cones_preserved);
        CHECK(w.charts.size() == 4);
    }
}

TEST_CASE("surface intersection numbers") {
    SUBCASE("F_n: negative section squares to -n") {
        for (int n : {0, 1, 2, 3}) {
            Fan f = Fan::hirzebruch(n);
            auto si = toric_surface_intersections(f);
            // ray 1 = e2 is the section C with C^2 = -n, ray 3 = -e2 has +n
            CHECK(si.pairing[1][1] == Rat(-n));
            CHECK(si.pairing[3][3] == Rat(n));
            CHECK(si.pairing[0][0] == Rat(0));   // fibers
            CHECK(si.pairing[2][2] == Rat(0));
        }
    }
    SUBCASE("P^2: lines square to 1") {
        auto si = toric_surface_intersections(Fan::projective_space(2));
        for (int i = 0; i < 3; ++i) CHECK(si.pairing[i][i] == Rat(1));
    }
    SUBCASE("blow-up of P^2: exceptional ray squares to -1") {
        Fan f = star_subdivision(Fan::projective_space(2), {0, 1});
        auto si = toric_surface_intersections(f);
        CHECK(si.pairing[3][3] == Rat(-1));   // the new ray
        // the two rays meeting E drop to self-intersection 0
        CHECK(si.pairing[0][0] == Rat(0));
        CHECK(si.pairing[1][1] == Rat(0));
    }
    SUBCASE("adjunction D.(D+K) = -2 on every boundary ray") {
        for (auto fan : {Fan::projective_space(2), Fan::hirzebruch(2), Fan::del_pezzo(3)}) {
            auto si = toric_surface_intersections(fan);
            int r = fan.ray_count();
            for (int i = 0; i < r; ++i) {
                std::vector<Rat> di(r, Rat(0)), dk(r, Rat(-1));
                di[i] = Rat(1);
                // D.(D + K)
                std::vector<Rat> dpk(r);
                for (int j = 0; j < r; ++j) dpk[j] = di[j] + dk[j];
                CHECK(si.pair(di, dpk) == Rat(-2));
            }
        }
    }
}
