#include "doctest.h"
#include "flift/gf.hpp"
#include <cstdlib>

using namespace flift;

TEST_CASE("prime field arithmetic") {
    const Field* F = Field::get(7);
    CHECK(F->q() == 7);
    CHECK(F->add(5, 4) == 2);
    CHECK(F->mul(3, 5) == 1);
    CHECK(F->inv(3) == 5);
    CHECK(F->pow(3, 6) == 1);
    CHECK(F->neg(0) == 0);
    CHECK(F->from_int(-1) == 6);
}

TEST_CASE("extension fields are fields") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}}) {
        const Field* F = Field::get(p, m);
        long q = F->q();
        // multiplicative group: every nonzero element has an inverse and a^(q-1) = 1
        for (int a = 1; a < q; ++a) {
            CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->pow(a, q - 1) == 1);
        }
        // Frobenius is additive and of order m
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
        for (int a = 0; a < q; ++a) {
            CHECK(F->pow_p(a, m) == a);
            CHECK(F->frobenius(F->frobenius_inverse(a)) == a);
        }
    }
}

TEST_CASE("field associativity and distributivity (exhaustive, q <= 9)") {
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}}) {
        const Field* F = Field::get(p, m);
        long q = F->q();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
    }
}

TEST_CASE("modulus override through the environment") {
    // (2,6) is untouched by the other cases, so the override takes effect here
    setenv("FLIFT_FQ_MODULUS", "p=2,m=6:1,1,0,0,0,0", 1);
    const Field* F = Field::get(2, 6);
    CHECK(F->modulus() == std::vector<int>{1, 1, 0, 0, 0, 0});   // x^6 + x + 1
    CHECK(F->q() == 64);
    for (int a = 1; a < 64; ++a) CHECK(F->mul(a, F->inv(a)) == 1);
    unsetenv("FLIFT_FQ_MODULUS");
}

TEST_CASE("dynamic extensions") {
    const Field* F = Field::get(3);
    ExtField E(F, 4);
    auto g = E.gen();
    // the generator satisfies no lower-degree relation: g, g^2, g^3 independent over F_3
    auto x = g;
    for (int i = 1; i < 4; ++i) {
        CHECK(!E.is_zero(x));
        x = E.mul(x, g);
    }
    // Frobenius has order 4 on E over F_3
    auto a = E.add(g, E.embed(2));
    auto fr = a;
    for (int i = 0; i < 4; ++i) fr = E.frobenius(fr);
    CHECK(fr == a);
    // fp coords roundtrip
    for (int i = 0; i < E.fp_dim(); ++i) {
        auto b = E.fp_basis(i);
        auto coords = E.fp_coords(b);
        int ones = 0;
        for (int c : coords) ones += (c != 0);
        CHECK(ones == 1);
    }
}

TEST_CASE("degree-6 extension is a genuine field") {
    // regression: the modulus search must not accept squarefree products of
    // lower-degree irreducibles (x^(q^d) = x tests alone let F_27 x F_9 x F_3
    // slip through); -1 = 2 must be a square in F_729 since 3^6 = 1 mod 4
    const Field* F = Field::get(3);
    ExtField E(F, 6);
    int sqrt2 = 0;
    std::vector<int> digits(6, 0);
    for (long code = 0; code < 729; ++code) {
        long c = code;
        for (int i = 0; i < 6; ++i) { digits[i] = (int)(c % 3); c /= 3; }
        ExtField::Elt x = E.zero();
        for (int i = 0; i < 6; ++i) x[i] = digits[i];
        if (E.mul(x, x) == E.embed(2)) ++sqrt2;
    }
    CHECK(sqrt2 == 2);
}

TEST_CASE("extension of a non-prime base field") {
    const Field* F9 = Field::get(3, 2);
    ExtField E(F9, 3);   // F_9^3 = F_729
    auto g = E.gen();
    auto one = E.embed(1);
    // x^(q^k) = x for q = 9, k = 3 on the generator
    auto t = g;
    for (int i = 0; i < 2 * 3; ++i) t = E.frobenius(t);  // p^(m*k) = full q^k power
    CHECK(t == g);
    CHECK(E.fp_dim() == 6);
    CHECK(!E.is_zero(E.sub(E.mul(g, E.embed(F9->inv(5))), E.mul(g, E.embed(2)))));
    (void)one;
}
