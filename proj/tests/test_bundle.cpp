#include "doctest.h"
#include <stdexcept>
#include <random>
#include "flift/bundle.hpp"

using namespace flift;

namespace {

LaurentTransitionMatrix diag2(const Field* F, int64_t a, int64_t b) {
    LaurentTransitionMatrix m(F, 2);
    m.m[0][0] = Laurent::monomial(F, a, 1);
    m.m[1][1] = Laurent::monomial(F, b, 1);
    return m;
}

} // namespace

TEST_CASE("splitting types of diagonal and triangular matrices") {
    const Field* F = Field::get(5);
    SUBCASE("diag(t^a, t^b)") {
        auto t = splitting_type(diag2(F, 3, -2));
        CHECK(t.a == std::vector<int64_t>{3, -2});
        CHECK(t.sum() == 1);
    }
    SUBCASE("[[t,1],[0,t^{-1}]] -> {1,-1}") {
        LaurentTransitionMatrix m(F, 2);
        m.m[0][0] = Laurent::monomial(F, 1, 1);
        m.m[0][1] = Laurent::constant(F, 1);
        m.m[1][1] = Laurent::monomial(F, -1, 1);
        auto t = splitting_type(m);
        CHECK(t.a == std::vector<int64_t>{1, -1});
    }
    SUBCASE("genuine extension jump: [[t^2, t],[0, t^{-1}]]") {
        // the coupling t sits strictly between the diagonal exponents, so the
        // type balances to {1, 0}
        LaurentTransitionMatrix m(F, 2);
        m.m[0][0] = Laurent::monomial(F, -1, 1);
        m.m[0][1] = Laurent::monomial(F, 0, 1);
        m.m[1][1] = Laurent::monomial(F, 2, 1);
        auto t = splitting_type(m);
        CHECK(t.sum() == 1);
        CHECK(t.a == std::vector<int64_t>{1, 0});
    }
    SUBCASE("the conic-tangent matrix") {
        LaurentTransitionMatrix m(F, 2);
        m.m[0][0] = Laurent::monomial(F, -2, F->neg(1));
        m.m[1][0] = Laurent::constant(F, 2);
        m.m[1][1] = Laurent::monomial(F, 1, F->neg(1));
        auto t = splitting_type(m);
        CHECK(t.a == std::vector<int64_t>{1, -2});
    }
    SUBCASE("non-invertible matrix rejected") {
        LaurentTransitionMatrix m(F, 2);
        m.m[0][0] = Laurent::constant(F, 1) + Laurent::monomial(F, 1, 1);
        m.m[1][1] = Laurent::constant(F, 1);
        CHECK_THROWS_AS(splitting_type(m), std::invalid_argument);
    }
}

TEST_CASE("splitting type invariance and determinant sum rule (randomized)") {
    std::mt19937_64 rng(41);
    const Field* F = Field::get(3);
    std::uniform_int_distribution<int> coef(0, 2);
    std::uniform_int_distribution<int> expo(-2, 2);
    auto random_poly_t = [&](bool anti) {
        Laurent l = Laurent::zero(F);
        for (int i = 0; i < 2; ++i) {
            int e = std::abs(expo(rng));
            l.set_coeff(anti ? -e : e, coef(rng));
        }
        return l;
    };
    for (int trial = 0; trial < 25; ++trial) {
        // start from a known diagonal, conjugate by unipotent-ish units
        int64_t a = expo(rng), b = expo(rng);
        LaurentTransitionMatrix m = diag2(F, a, b);
        // left: row ops over k[t]; right: column ops over k[t^{-1}]
        for (int rep = 0; rep < 3; ++rep) {
            Laurent q = random_poly_t(false);
            for (int c = 0; c < 2; ++c) m.m[0][c] += q * m.m[1][c];
            Laurent q2 = random_poly_t(true);
            for (int r = 0; r < 2; ++r) m.m[r][1] += q2 * m.m[r][0];
        }
        auto t = splitting_type(m);
        std::vector<int64_t> expect = {std::max(a, b), std::min(a, b)};
        CHECK(t.a == expect);
        CHECK(t.sum() == m.det().val());
    }
}

TEST_CASE("restriction of the log cotangent sheaf") {
    const Field* F = Field::get(5);
    Poly x0 = Poly::variable(F, 3, 0), x1 = Poly::variable(F, 3, 1), x2 = Poly::variable(F, 3, 2);
    SUBCASE("smooth conic and its tangent line") {
        // D: x2 x0 = x1^2, C: the tangent line x2 = 0 through (0:0:1)... the
        // parametrization (1 : t : 0) realizes y = 0 tangent to y = x^2 at 0
        Poly conic = x2 * x0 - x1 * x1;
        CurveInP2 line{F, 1,
                       {Poly::variable(F, 2, 0), Poly::variable(F, 2, 1), Poly::zero(F, 2)}};
        auto m = restrict_log_cotangent({conic}, line);
        // the paper's matrix [[-t^{-2}, 0], [2, -t]]
        CHECK(m.m[0][0] == Laurent::monomial(F, -2, F->neg(1)));
        CHECK(m.m[0][1].is_zero());
        CHECK(m.m[1][0] == Laurent::constant(F, 2));
        CHECK(m.m[1][1] == Laurent::monomial(F, 1, F->neg(1)));
        auto t = splitting_type(m);
        CHECK(t.a == std::vector<int64_t>{1, -2});
        CHECK(!nef_obstruction(t, 5));
    }
    SUBCASE("three coordinate lines, generic line") {
        std::vector<Poly> comps = {x0, x1, x2};
        // (1 : 1 + t : 2 + t): misses the coordinate vertices
        Poly s = Poly::variable(F, 2, 0), tt = Poly::variable(F, 2, 1);
        CurveInP2 line{F, 1, {s, s + tt, s.scaled(2) + tt}};
        auto m = restrict_log_cotangent(comps, line);
        auto t = splitting_type(m);
        CHECK(t.sum() == 0);   // deg omega_{P^2}(D)|_C = 1*(3-3)
        CHECK(t.a == std::vector<int64_t>{0, 0});
        CHECK(nef_obstruction(t, 5));
    }
    SUBCASE("two components, line: sum rule and type {0,-1}") {
        // D = {x0, x2}; C = (s : t : 2s + t) meets x2 at t = -2 and x0 at
        // infinity, and leaves chart 1 only at t = 0
        Poly s = Poly::variable(F, 2, 0), tt = Poly::variable(F, 2, 1);
        CurveInP2 line{F, 1, {s, tt, s.scaled(2) + tt}};
        auto m = restrict_log_cotangent({x0, x2}, line);
        auto t = splitting_type(m);
        CHECK(t.sum() == 1 * (2 - 3));   // d (deg D - 3)
        CHECK(t.a == std::vector<int64_t>{0, -1});
        CHECK(nef_obstruction(t, 5));
    }
    SUBCASE("double cover of a line against the coordinate triangle") {
        // phi = (s^2 : t^2 : (s+t)^2), a 2:1 parametrized rational curve
        Poly s = Poly::variable(F, 2, 0), tt = Poly::variable(F, 2, 1);
        CurveInP2 curve{F, 2, {s * s, tt * tt, (s + tt) * (s + tt)}};
        auto m = restrict_log_cotangent({x0, x1, x2}, curve);
        auto t = splitting_type(m);
        CHECK(t.sum() == 0);   // 2*(3-3)
        CHECK(t.a == std::vector<int64_t>{0, 0});
    }
    SUBCASE("non-normalizable configuration reports an error") {
        // the curve exits chart 1 at t = -1, so the two standard charts do
        // not cover it cleanly and the transition is not Laurent
        Poly s = Poly::variable(F, 2, 0), tt = Poly::variable(F, 2, 1);
        CurveInP2 line{F, 1, {s, s + tt, s.scaled(2) + tt}};
        CHECK_THROWS(restrict_log_cotangent({x1}, line));
    }
    SUBCASE("curve inside the divisor is rejected") {
        CurveInP2 line{F, 1,
                       {Poly::variable(F, 2, 0), Poly::variable(F, 2, 1), Poly::zero(F, 2)}};
        CHECK_THROWS_AS(restrict_log_cotangent({x2}, line), std::invalid_argument);
    }
    SUBCASE("charts must cover the curve") {
        // phi_0 vanishing at finite t is rejected
        Poly s = Poly::variable(F, 2, 0), tt = Poly::variable(F, 2, 1);
        CurveInP2 bad{F, 1, {tt, s, s + tt}};
        CHECK_THROWS_AS(restrict_log_cotangent({x2}, bad), std::invalid_argument);
    }
}

TEST_CASE("determinant degree bookkeeping across (d, D) pairs") {
    const Field* F = Field::get(3);
    Poly x0 = Poly::variable(F, 3, 0), x1 = Poly::variable(F, 3, 1), x2 = Poly::variable(F, 3, 2);
    Poly s = Poly::variable(F, 2, 0), tt = Poly::variable(F, 2, 1);
    struct Case {
        std::vector<Poly> comps;
        CurveInP2 curve;
    };
    std::vector<Case> cases;
    cases.push_back({{x2 * x0 - x1 * x1}, {F, 1, {s, tt, Poly::zero(F, 2)}}});
    cases.push_back({{x0, x1, x2}, {F, 1, {s, tt, s.scaled(2) + tt}}});
    cases.push_back({{x0, x2}, {F, 2, {s * s, tt * tt, tt * tt + s * s}}});
    for (auto& c : cases) {
        int64_t deg_d = 0;
        for (auto& h : c.comps) {
            int64_t d;
            h.is_homogeneous(&d);
            deg_d += d;
        }
        auto m = restrict_log_cotangent(c.comps, c.curve);
        CHECK(m.det().val() == c.curve.degree * (deg_d - 3));
    }
}

TEST_CASE("semilinear fixed points") {
    SUBCASE("identity map has p^r rational points over F_p") {
        for (int p : {2, 3, 5}) {
            const Field* F = Field::get(p);
            std::vector<std::vector<int>> id = {{1, 0}, {0, 1}};
            auto fc = semilinear_fixed_points(SemilinearMap(F, id), 1);
            CHECK(fc.count == (int64_t)p * p);
            CHECK(fc.dim == 2);
        }
    }
    SUBCASE("zero map has only the origin") {
        const Field* F = Field::get(3);
        std::vector<std::vector<int>> z = {{0, 0}, {0, 0}};
        auto fc = semilinear_fixed_points(SemilinearMap(F, z), 1);
        CHECK(fc.count == 1);
        auto st = stabilized_fixed_points(SemilinearMap(F, z));
        CHECK(st.count == 1);
        CHECK(!st.cap_hit);
    }
    SUBCASE("a map needing a degree-2 extension") {
        // v = a v^p over F_3 with a a non-residue: v^{p-1} = a^{-1} needs F_9
        const Field* F = Field::get(3);
        std::vector<std::vector<int>> a = {{2}};
        auto over_f3 = semilinear_fixed_points(SemilinearMap(F, a), 1);
        CHECK(over_f3.count == 1);   // only 0: v^2 = 2 has no F_3 solution
        auto st = stabilized_fixed_points(SemilinearMap(F, a));
        CHECK(st.count == 3);
        CHECK(st.field_degree == 2);
    }
    SUBCASE("solutions verify") {
        const Field* F = Field::get(2);
        std::vector<std::vector<int>> a = {{1, 1}, {0, 1}};
        SemilinearMap sm(F, a);
        auto st = stabilized_fixed_points(sm);
        CHECK(st.count == 4);
        auto fc = semilinear_fixed_points(sm, st.field_degree);
        CHECK(fc.count == 4);
        ExtField E(F, st.field_degree);
        for (const auto& v : fc.basis) {
            // check v = A v^[p]
            for (int i = 0; i < sm.r; ++i) {
                ExtField::Elt acc = E.zero();
                for (int j = 0; j < sm.r; ++j)
                    if (sm.a[i][j]) acc = E.add(acc, E.mul_base(E.frobenius(v[j]), sm.a[i][j]));
                CHECK(acc == v[i]);
            }
        }
    }
    SUBCASE("random invertible maps stabilize at p^r") {
        std::mt19937_64 rng(47);
        for (int p : {2, 3, 5}) {
            const Field* F = Field::get(p);
            std::uniform_int_distribution<int> c(0, p - 1);
            for (int r = 1; r <= 3; ++r) {
                int done = 0;
                while (done < 5) {
                    std::vector<std::vector<int>> a(r, std::vector<int>(r));
                    for (auto& row : a)
                        for (auto& x : row) x = c(rng);
                    SemilinearMap sm(F, a);
                    if (!sm.invertible()) continue;
                    auto st = stabilized_fixed_points(sm);
                    CHECK(!st.cap_hit);
                    int64_t expect = 1;
                    for (int i = 0; i < r; ++i) expect *= p;
                    CHECK(st.count == expect);
                    ++done;
                }
            }
        }
    }
    SUBCASE("singular maps stabilize strictly below p^r") {
        std::mt19937_64 rng(59);
        const Field* F = Field::get(3);
        std::uniform_int_distribution<int> c(0, 2);
        int seen = 0;
        while (seen < 8) {
            std::vector<std::vector<int>> a(2, std::vector<int>(2));
            for (auto& row : a)
                for (auto& x : row) x = c(rng);
            SemilinearMap sm(F, a);
            if (sm.invertible()) continue;
            auto st = stabilized_fixed_points(sm);
            CHECK(st.count < 9);
            ++seen;
        }
    }
    SUBCASE("count is monotone-bounded by p^r") {
        std::mt19937_64 rng(53);
        const Field* F = Field::get(3);
        std::uniform_int_distribution<int> c(0, 2);
        for (int t = 0; t < 10; ++t) {
            std::vector<std::vector<int>> a(2, std::vector<int>(2));
            for (auto& row : a)
                for (auto& x : row) x = c(rng);
            for (int m = 1; m <= 4; ++m)
                CHECK(semilinear_fixed_points(SemilinearMap(F, a), m).count <= 9);
        }
    }
}

TEST_CASE("etale fixed scheme check") {
    const Field* F = Field::get(3);
    int p = 3;
    SUBCASE("standard toric xi on A^1: A = (x^{p-1})") {
        std::vector<std::vector<Poly>> a = {{Poly::variable(F, 1, 0).pow(p - 1)}};
        auto rep = etale_fixed_scheme_check(a, {{1}, {0}, {2}});
        CHECK(rep.jacobian_is_identity);
        REQUIRE(rep.samples.size() == 3);
        CHECK(rep.samples[0].det_nonzero);
        CHECK(rep.samples[0].fiber_count == p);
        CHECK(!rep.samples[1].det_nonzero);
        CHECK(rep.samples[1].fiber_count == 1);
        CHECK(rep.samples[2].det_nonzero);
        CHECK(rep.samples[2].fiber_count == p);
    }
    SUBCASE("two-variable chart matrix") {
        Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
        std::vector<std::vector<Poly>> a = {{x.pow(p - 1), y}, {Poly::zero(F, 2), y.pow(p - 1)}};
        auto rep = etale_fixed_scheme_check(a, {{1, 1}, {0, 1}});
        CHECK(rep.jacobian_is_identity);
        CHECK(rep.samples[0].fiber_count == p * p);
    }
}
