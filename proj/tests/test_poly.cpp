#include "doctest.h"
#include <stdexcept>
#include "flift/poly.hpp"

#include <random>

using namespace flift;

TEST_CASE("basic arithmetic") {
    const Field* F = Field::get(5);
    Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
    Poly f = (x + y).pow(2);
    CHECK(f == x * x + (x * y).scaled(2) + y * y);
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK((f - f).is_zero());
    CHECK(f.eval({1, 2}) == 4);  // (1+2)^2 = 9 = 4 mod 5
}

TEST_CASE("freshman's dream in char p") {
    const Field* F = Field::get(3);
    Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
    Poly f = x.scaled(2) + y * y + Poly::constant(F, 2, 1);
    CHECK(f.pow(3) == f.frobenius());
}

TEST_CASE("derivative rules") {
    const Field* F = Field::get(7);
    Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
    Poly f = x.pow(3) * y + x.scaled(4);
    CHECK(f.derivative(0) == x.pow(2).scaled(3) * y + Poly::constant(F, 2, 4));
    CHECK(f.derivative(1) == x.pow(3));
    // d/dx x^7 = 0 in char 7
    CHECK(x.pow(7).derivative(0).is_zero());
}

TEST_CASE("division") {
    const Field* F = Field::get(5);
    Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
    Poly d = x - y;
    Poly f = x * x - y * y;
    Poly q;
    CHECK(f.divisible_by(d, &q));
    CHECK(q * d == f);
    CHECK(!(f + Poly::constant(F, 2, 1)).divisible_by(d));
    // mixed: quotient-remainder identity on random samples
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(0, 4);
    for (int t = 0; t < 30; ++t) {
        Poly g(F, 2);
        for (int i = 0; i < 4; ++i)
            g.set_coeff({c(rng), c(rng)}, c(rng));
        if (g.is_zero()) continue;
        auto [quot, rem] = f.divrem(g);
        CHECK(quot * g + rem == f);
    }
}

TEST_CASE("substitution composes") {
    const Field* F = Field::get(3);
    Poly x = Poly::variable(F, 1, 0);
    Poly f = x * x + Poly::constant(F, 1, 1);
    Poly g = x + Poly::constant(F, 1, 2);
    Poly fg = f.substitute({g});
    for (int a = 0; a < 3; ++a)
        CHECK(fg.eval({a}) == f.eval({g.eval({a})}));
}

TEST_CASE("exponent overflow is a checked error") {
    const Field* F = Field::get(2);
    Poly big = Poly::monomial(F, {INT64_MAX / 2 + 1}, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
