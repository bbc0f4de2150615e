#include "doctest.h"
#include <stdexcept>
#include "flift/surface_delta.hpp"

using namespace flift;

TEST_CASE("state validation") {
    SUBCASE("the full boundary is always valid") {
        for (auto fan : {Fan::projective_space(2), Fan::hirzebruch(2), Fan::del_pezzo(3)}) {
            auto st = SurfaceDeltaState::full_boundary(fan);
            st.validate();
        }
    }
    SUBCASE("coefficients outside (0,1] are rejected") {
        Fan p2 = Fan::projective_space(2);
        CHECK_THROWS_AS(SurfaceDeltaState(p2, {Rat(1), Rat(1), Rat(2)}), std::invalid_argument);
        CHECK_THROWS_AS(SurfaceDeltaState(p2, {Rat(0), Rat(1), Rat(1)}), std::invalid_argument);
    }
    SUBCASE("Delta must be linearly equivalent to -K") {
        Fan p2 = Fan::projective_space(2);
        CHECK_THROWS_AS(SurfaceDeltaState(p2, {Rat(1), Rat(1), Rat(1, 2)}),
                        std::invalid_argument);
    }
}

TEST_CASE("descent accepts nodes of the boundary") {
    SUBCASE("P^2 at a corner gives the F_1 state") {
        auto st = SurfaceDeltaState::full_boundary(Fan::projective_space(2));
        auto out = blowup_delta_descent(st, {0, 1});
        REQUIRE(std::holds_alternative<SurfaceDeltaState>(out));
        const auto& next = std::get<SurfaceDeltaState>(out);
        CHECK(next.fan().ray_count() == 4);
        CHECK(next.coeffs().back() == Rat(1));   // E enters with coefficient one
        CHECK(fan_isomorphism(next.fan(), Fan::hirzebruch(1)).has_value());
        next.validate();
    }
    SUBCASE("F_0 corner gives the 5-ray del Pezzo state") {
        auto st = SurfaceDeltaState::full_boundary(Fan::hirzebruch(0));
        auto out = blowup_delta_descent(st, *st.fan().max_cones().begin());
        REQUIRE(std::holds_alternative<SurfaceDeltaState>(out));
        CHECK(std::get<SurfaceDeltaState>(out).fan().ray_count() == 5);
    }
    SUBCASE("chains preserve validity") {
        auto st = SurfaceDeltaState::full_boundary(Fan::projective_space(2));
        for (int k = 0; k < 5; ++k) {
            auto corner = st.fan().max_cones()[k % st.fan().max_cones().size()];
            auto out = blowup_delta_descent(st, corner);
            REQUIRE(std::holds_alternative<SurfaceDeltaState>(out));
            st = std::get<SurfaceDeltaState>(out);
            st.validate();
            CHECK(st.fan().ray_count() == 4 + k);
        }
        CHECK(st.history().size() == 5);
    }
}

TEST_CASE("descent refusals") {
    auto st = SurfaceDeltaState::full_boundary(Fan::projective_space(2));
    SUBCASE("smooth point of the floor divisor") {
        auto out = blowup_delta_descent(st, {0, 1}, true);
        REQUIRE(std::holds_alternative<DescentRefusal>(out));
        CHECK(std::get<DescentRefusal>(out).reason.find("smooth point") != std::string::npos);
    }
    SUBCASE("not a torus-fixed point") {
        auto out = blowup_delta_descent(st, {0});
        CHECK(std::holds_alternative<DescentRefusal>(out));
    }
    SUBCASE("center outside the surface") {
        CHECK_THROWS_AS(blowup_delta_descent(st, {0, 7}), std::invalid_argument);
    }
}

TEST_CASE("Hirzebruch identities") {
    for (int n : {0, 1, 2, 3}) {
        auto id = hirzebruch_delta_constraints(n);
        CHECK(id.delta_prime_dot_c == Rat(0));
        CHECK(id.delta_prime_dot_g == Rat(1));
        if (n == 0) CHECK(id.product_decomposition_ok);
    }
}
