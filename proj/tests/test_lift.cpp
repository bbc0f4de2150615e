#include "doctest.h"
#include <stdexcept>
#include "flift/cartier.hpp"
#include "flift/lift.hpp"

#include <random>

using namespace flift;

TEST_CASE("delta on the standard lift") {
    for (int p : {2, 3, 5}) {
        const Field* F = Field::get(p);
        auto chart = FrobeniusLiftChart::standard(F, 1);
        Poly x = Poly::variable(F, 1, 0);
        CHECK(chart.delta(x).is_zero());
    }
    // p = 2: delta(x+1) = x, from (x+1)^2 vs x^2+1 in W_2
    const Field* F = Field::get(2);
    auto chart = FrobeniusLiftChart::standard(F, 1);
    Poly x = Poly::variable(F, 1, 0);
    CHECK(chart.delta(x + Poly::constant(F, 1, 1)) == x);
}

TEST_CASE("delta picks out the chart images") {
    const Field* F = Field::get(3);
    Poly y2 = Poly::variable(F, 2, 1);
    std::vector<Poly> images = {y2, Poly::zero(F, 2)};  // F*(x) = x^p + p*y
    FrobeniusLiftChart chart(F, images);
    Poly x = Poly::variable(F, 2, 0);
    CHECK(chart.delta(x) == y2);
}

TEST_CASE("reduction of the pullback is the p-th power map (randomized)") {
    std::mt19937_64 rng(11);
    for (int p : {2, 3, 5}) {
        const Field* F = Field::get(p);
        for (int t = 0; t < 10; ++t) {
            std::vector<Poly> images = {random_poly(F, 2, 3, rng), random_poly(F, 2, 3, rng)};
            FrobeniusLiftChart chart(F, images);
            Poly g = random_poly(F, 2, 4, rng);
            auto pb = chart.frobenius_pullback(W2Polynomial::lift(g));
            CHECK(pb.reduce_mod_p() == g.frobenius());
        }
    }
}

TEST_CASE("two lifts transform delta by e^p") {
    // nu* is well defined on W2 elements: delta(g~ + p e~) = delta(g~) + e^p
    std::mt19937_64 rng(13);
    for (int p : {2, 3}) {
        const Field* F = Field::get(p);
        for (int t = 0; t < 8; ++t) {
            std::vector<Poly> images = {random_poly(F, 2, 2, rng), random_poly(F, 2, 2, rng)};
            FrobeniusLiftChart chart(F, images);
            Poly g = random_poly(F, 2, 3, rng), e = random_poly(F, 2, 3, rng);
            W2Polynomial lift1 = W2Polynomial::lift(g);
            W2Polynomial lift2 = lift1 + W2Polynomial::lift(e).times_p();
            CHECK(chart.delta_of_lift(lift2) == chart.delta_of_lift(lift1) + e.frobenius());
        }
    }
}

TEST_CASE("xi on basis forms") {
    const Field* F = Field::get(3);
    int p = 3;
    SUBCASE("standard lift: xi(dx) = x^{p-1} dx") {
        auto chart = FrobeniusLiftChart::standard(F, 1);
        LogForm dx = LogForm::term(F, 1, {0}, Poly::constant(F, 1, 1));
        LogForm expect = LogForm::term(F, 1, {0}, Poly::variable(F, 1, 0).pow(p - 1));
        CHECK(chart.xi(dx) == expect);
    }
    SUBCASE("standard lift: xi(dlog x) = dlog x") {
        auto chart = FrobeniusLiftChart::standard(F, 1);
        LogForm dlx = LogForm::term(F, 1, {0}, Poly::constant(F, 1, 1), {0});
        CHECK(chart.xi(dlx) == dlx);
    }
    SUBCASE("lift with f_1 = y: xi(dx) = x^{p-1} dx + dy") {
        std::vector<Poly> images = {Poly::variable(F, 2, 1), Poly::zero(F, 2)};
        FrobeniusLiftChart chart(F, images);
        LogForm dx = LogForm::term(F, 2, {0}, Poly::constant(F, 2, 1));
        LogForm expect = LogForm::term(F, 2, {0}, Poly::variable(F, 2, 0).pow(p - 1)) +
                         LogForm::term(F, 2, {1}, Poly::constant(F, 2, 1));
        CHECK(chart.xi(dx) == expect);
    }
    SUBCASE("incompatible marking is rejected") {
        std::vector<Poly> images = {Poly::variable(F, 2, 1), Poly::zero(F, 2)};
        FrobeniusLiftChart chart(F, images);
        LogForm dlx = LogForm::term(F, 2, {0}, Poly::constant(F, 2, 1), {0});
        CHECK_THROWS_AS(chart.xi(dlx), std::domain_error);
    }
}

TEST_CASE("xi is additive and p-semilinear (randomized)") {
    std::mt19937_64 rng(17);
    for (int p : {2, 3}) {
        const Field* F = Field::get(p);
        for (int t = 0; t < 8; ++t) {
            std::vector<Poly> images = {random_poly(F, 2, 2, rng), random_poly(F, 2, 2, rng)};
            FrobeniusLiftChart chart(F, images);
            LogForm w1 = LogForm::zero(F, 2, 1), w2 = LogForm::zero(F, 2, 1);
            w1.set_component({0}, random_poly(F, 2, 2, rng));
            w1.set_component({1}, random_poly(F, 2, 2, rng));
            w2.set_component({0}, random_poly(F, 2, 2, rng));
            Poly a = random_poly(F, 2, 2, rng);
            CHECK(chart.xi(w1 + w2) == chart.xi(w1) + chart.xi(w2));
            CHECK(chart.xi(w1.scaled(a)) == chart.xi(w1).scaled(a.frobenius()));
        }
    }
}

TEST_CASE("compatible divisors") {
    const Field* F = Field::get(3);
    SUBCASE("standard lift accepts coordinates") {
        auto chart = FrobeniusLiftChart::standard(F, 2);
        Poly x = Poly::variable(F, 2, 0);
        CHECK(is_compatible_divisor(chart, x));
        auto w = compatible_divisor_witness(chart, x);
        REQUIRE(w.has_value());
        // witness: F*(h~) = u h~^p exactly
        auto lhs = chart.frobenius_pullback(W2Polynomial::lift(x));
        CHECK(lhs == *w * W2Polynomial::lift(x).pow(3));
    }
    SUBCASE("the diagonal is not compatible with the standard lift") {
        // delta(x-y) = xy(x-y) for p = 3, which (x-y)^3 does not divide; no
        // choice of embedded deformation repairs this since the defect is not
        // a p-th power modulo (x-y)^3
        auto chart = FrobeniusLiftChart::standard(F, 2);
        Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
        CHECK(chart.delta(x - y) == x * y * (x - y));
        CHECK(!is_compatible_divisor(chart, x - y));
    }
    SUBCASE("unit multiples do not change compatibility") {
        auto chart = FrobeniusLiftChart::standard(F, 2);
        Poly x = Poly::variable(F, 2, 0);
        CHECK(is_compatible_divisor(chart, x.scaled(2)));
    }
    SUBCASE("f_1 = y breaks compatibility of x") {
        std::vector<Poly> images = {Poly::variable(F, 2, 1), Poly::zero(F, 2)};
        FrobeniusLiftChart chart(F, images);
        CHECK(!is_compatible_divisor(chart, Poly::variable(F, 2, 0)));
    }
    SUBCASE("zero divisor is an error") {
        auto chart = FrobeniusLiftChart::standard(F, 1);
        CHECK_THROWS_AS(is_compatible_divisor(chart, Poly::zero(F, 1)), std::invalid_argument);
    }
}

TEST_CASE("blow-up centers") {
    const Field* F = Field::get(2);
    int p = 2;
    SUBCASE("standard lift extends to any coordinate blow-up") {
        auto chart = FrobeniusLiftChart::standard(F, 2);
        CHECK(is_compatible_blowup_center(chart, {0, 1}));
    }
    SUBCASE("constant image obstructs") {
        std::vector<Poly> images = {Poly::constant(F, 2, 1), Poly::zero(F, 2)};
        FrobeniusLiftChart chart(F, images);
        CHECK(!is_compatible_blowup_center(chart, {0, 1}));
    }
    SUBCASE("image in I^p passes") {
        std::vector<Poly> images = {Poly::variable(F, 2, 0).pow(p), Poly::zero(F, 2)};
        FrobeniusLiftChart chart(F, images);
        CHECK(is_compatible_blowup_center(chart, {0, 1}));
    }
}

TEST_CASE("theta and nu compose to Frobenius and sigma") {
    std::mt19937_64 rng(23);
    for (int p : {2, 3, 5}) {
        const Field* F = Field::get(p);
        auto std_chart = FrobeniusLiftChart::standard(F, 1);
        Poly x = Poly::variable(F, 1, 0);
        // standard lift: theta(nu(x~)) = x~^p
        auto rt = theta_nu_roundtrip(std_chart, x, Poly::zero(F, 1));
        CHECK(rt.theta_nu_is_frobenius);
        CHECK(rt.nu_theta_is_sigma);
        CHECK(rt.theta_after_nu == W2Polynomial::variable(F, 1, 0).pow(p));
        // nu(theta(x, 0)) = (x^p, 0)
        CHECK(rt.nu_after_theta.first == x.pow(p));
        CHECK(rt.nu_after_theta.second.is_zero());

        // lift with f_1 = y: theta(nu(x~)) = x~^p + p y~
        const Field* F2 = F;
        std::vector<Poly> images = {Poly::variable(F2, 2, 1), Poly::zero(F2, 2)};
        FrobeniusLiftChart chart(F2, images);
        Poly x2 = Poly::variable(F2, 2, 0);
        auto rt2 = theta_nu_roundtrip(chart, x2, Poly::zero(F2, 2));
        CHECK(rt2.theta_after_nu ==
              W2Polynomial::variable(F2, 2, 0).pow(p) +
                  W2Polynomial::variable(F2, 2, 1).times_p());

        // random inputs
        for (int t = 0; t < 10; ++t) {
            std::vector<Poly> im = {random_poly(F, 2, 2, rng), random_poly(F, 2, 2, rng)};
            FrobeniusLiftChart c(F, im);
            auto r = theta_nu_roundtrip(c, random_poly(F, 2, 3, rng), random_poly(F, 2, 3, rng));
            CHECK(r.theta_nu_is_frobenius);
            CHECK(r.nu_theta_is_sigma);
        }
    }
}

TEST_CASE("det xi on P^n") {
    SUBCASE("standard lift gives the reduced toric boundary") {
        for (int p : {2, 3, 5}) {
            for (int n : {1, 2}) {
                const Field* F = Field::get(p);
                Poly s = det_xi_divisor_Pn(ProjectiveLift::standard(F, n));
                Poly expect = Poly::constant(F, n + 1, 1);
                for (int i = 0; i <= n; ++i)
                    expect *= Poly::variable(F, n + 1, i).pow(p - 1);
                CHECK(s == expect);
            }
        }
    }
    SUBCASE("frozen nonstandard example: n=1, p=2, f_0 = x_1^2") {
        const Field* F = Field::get(2);
        Poly x0 = Poly::variable(F, 2, 0), x1 = Poly::variable(F, 2, 1);
        ProjectiveLift lift(F, 1, {x1 * x1, Poly::zero(F, 2)});
        Poly s = det_xi_divisor_Pn(lift);
        CHECK(s == x0 * x1);           // computed by direct 2-chart expansion of dF/p
        CHECK(s.degree() == 2);        // (n+1)(p-1)
    }
    SUBCASE("degree contract on random liftings") {
        std::mt19937_64 rng(5);
        for (int p : {2, 3}) {
            const Field* F = Field::get(p);
            int n = 2;
            for (int t = 0; t < 5; ++t) {
                // random homogeneous degree-p data
                std::vector<Poly> fs;
                for (int i = 0; i <= n; ++i) {
                    Poly f(F, n + 1);
                    for (int reps = 0; reps < 3; ++reps) {
                        Exp e(n + 1, 0);
                        int rem = p;
                        for (int v = 0; v < n; ++v) {
                            std::uniform_int_distribution<int> d(0, rem);
                            e[v] = d(rng);
                            rem -= (int)e[v];
                        }
                        e[n] = rem;
                        std::uniform_int_distribution<int> c(0, p - 1);
                        f.set_coeff(e, c(rng));
                    }
                    fs.push_back(f);
                }
                ProjectiveLift lift(F, n, fs);
                Poly s = det_xi_divisor_Pn(lift);
                int64_t deg;
                CHECK(s.is_homogeneous(&deg));
                CHECK(deg == (int64_t)(n + 1) * (p - 1));
            }
        }
    }
    SUBCASE("degree-p homogeneity is enforced") {
        const Field* F = Field::get(3);
        Poly bad = Poly::variable(F, 2, 0);  // degree 1, not p
        CHECK_THROWS_AS(ProjectiveLift(F, 1, {bad, Poly::zero(F, 2)}), std::invalid_argument);
    }
}
