#include "doctest.h"
#include <cstdlib>
#include <fstream>
#include <random>
#include <stdexcept>
#include "flift/json_io.hpp"

using namespace flift;

TEST_CASE("polynomial wire format") {
    // the documented example: {"p":3,"q":3,"vars":["x","y"],"terms":[{"e":[2,0],"c":[1,0]}]}
    json j = json::parse(R"({"p":3,"q":3,"vars":["x","y"],"terms":[{"e":[2,0],"c":[1,0]}]})");
    Poly f = poly_from_json(j);
    CHECK(f.nvars() == 2);
    CHECK(f.field()->p() == 3);
    CHECK(f == Poly::variable(f.field(), 2, 0).pow(2));
}

TEST_CASE("round trips (randomized)") {
    std::mt19937_64 rng(61);
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 1}}) {
        const Field* F = Field::get(p, m);
        std::uniform_int_distribution<int> c(0, (int)F->q() - 1);
        for (int t = 0; t < 10; ++t) {
            Poly f(F, 2);
            for (int i = 0; i < 5; ++i)
                f.set_coeff({(int64_t)(rng() % 4), (int64_t)(rng() % 4)}, c(rng));
            CHECK(poly_from_json(poly_to_json(f)) == f);
            W2Polynomial w(F, 2);
            for (int i = 0; i < 5; ++i)
                w.set_coeff({(int64_t)(rng() % 4), (int64_t)(rng() % 4)},
                            WittScalar2(F, c(rng), c(rng)));
            CHECK(w2poly_from_json(w2poly_to_json(w)) == w);
        }
    }
}

TEST_CASE("fan wire format") {
    json j = json::parse(R"({"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"cones":[[0,1],[1,2],[2,0]]})");
    Fan fan = fan_from_json(j);
    CHECK(fan.ray_count() == 3);
    CHECK(is_smooth(fan));
    CHECK(is_complete(fan));
    // round trip
    Fan fan2 = fan_from_json(fan_to_json(fan));
    CHECK(fan2.rays() == fan.rays());
    CHECK(fan2.max_cones() == fan.max_cones());
}

TEST_CASE("catalog fans all validate") {
    for (const auto& name : catalog_fan_names()) {
        Fan fan = catalog_fan(name);
        CHECK(is_smooth(fan));
        if (name != "A1") CHECK(is_complete(fan));
        Fan rt = fan_from_json(fan_to_json(fan));
        CHECK(rt.rays() == fan.rays());
    }
    CHECK_THROWS_AS(catalog_fan("nope"), std::invalid_argument);
}

TEST_CASE("bundled catalog file matches the built-in fans") {
    const char* dir = std::getenv("FLIFT_DATA_DIR");
    std::string path = std::string(dir ? dir : "data") + "/fan_catalog.json";
    std::ifstream in(path);
    if (!in) {
        MESSAGE("fan_catalog.json not found at ", path, "; skipping");
        return;
    }
    json j = json::parse(in);
    for (const auto& name : catalog_fan_names()) {
        REQUIRE(j.at("fans").contains(name));
        Fan from_file = fan_from_json(j.at("fans").at(name));
        Fan builtin = catalog_fan(name);
        CHECK(from_file.rays() == builtin.rays());
        CHECK(from_file.max_cones() == builtin.max_cones());
    }
}

TEST_CASE("divisor witness format") {
    SplittingDivisorP1 d{2, {1, 1}, 0};
    json j = divisor_witness_to_json(d);
    CHECK(j["denominator"] == 1);
    CHECK(j["infty"] == 0);
    CHECK(j["points"].size() == 2);
}

TEST_CASE("laurent matrix round trip") {
    const Field* F = Field::get(5);
    LaurentTransitionMatrix m(F, 2);
    m.m[0][0] = Laurent::monomial(F, -2, 4);
    m.m[1][0] = Laurent::constant(F, 2);
    m.m[1][1] = Laurent::monomial(F, 1, 4) + Laurent::constant(F, 1);
    auto j = laurent_matrix_to_json(m);
    auto m2 = laurent_matrix_from_json(F, j);
    for (int i = 0; i < 2; ++i)
        for (int c = 0; c < 2; ++c) CHECK(m.m[i][c] == m2.m[i][c]);
}
