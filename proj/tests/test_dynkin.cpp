#include "doctest.h"
#include <stdexcept>
#include "flift/dynkin.hpp"

using namespace flift;

TEST_CASE("positive root counts") {
    // |Phi^+| = n(n+1)/2 for A_n, n^2 for B_n/C_n, n(n-1) for D_n,
    // 36/63/120 for E_6/7/8, 24 for F_4, 6 for G_2
    CHECK(positive_roots(DynkinType::A, 3).size() == 6);
    CHECK(positive_roots(DynkinType::B, 3).size() == 9);
    CHECK(positive_roots(DynkinType::C, 3).size() == 9);
    CHECK(positive_roots(DynkinType::D, 4).size() == 12);
    CHECK(positive_roots(DynkinType::E, 6).size() == 36);
    CHECK(positive_roots(DynkinType::E, 7).size() == 63);
    CHECK(positive_roots(DynkinType::E, 8).size() == 120);
    CHECK(positive_roots(DynkinType::F, 4).size() == 24);
    CHECK(positive_roots(DynkinType::G, 2).size() == 6);
}

TEST_CASE("dimensions of G/P") {
    CHECK(dim_G_mod_P(MarkedDynkinDiagram(DynkinType::A, 3, {1})) == 3);
    CHECK(dim_G_mod_P(MarkedDynkinDiagram(DynkinType::C, 3, {1})) == 5);
    CHECK(dim_G_mod_P(MarkedDynkinDiagram(DynkinType::A, 2, {1, 2})) == 3);
    // quadrics: B_n node 1 has dimension 2n-1
    CHECK(dim_G_mod_P(MarkedDynkinDiagram(DynkinType::B, 3, {1})) == 5);
    // full flag of A_n: all positive roots
    CHECK(dim_G_mod_P(MarkedDynkinDiagram(DynkinType::A, 4, {1, 2, 3, 4})) == 10);
    // closed form alpha(n+1-alpha) on A_n
    for (int n = 1; n <= 8; ++n)
        for (int a = 1; a <= n; ++a)
            CHECK(dim_G_mod_P(MarkedDynkinDiagram(DynkinType::A, n, {a})) ==
                  (int64_t)a * (n + 1 - a));
}

TEST_CASE("projective space recognition") {
    CHECK(is_projective_space(MarkedDynkinDiagram(DynkinType::A, 4, {4})) == 4);
    CHECK(is_projective_space(MarkedDynkinDiagram(DynkinType::A, 4, {1})) == 4);
    CHECK(is_projective_space(MarkedDynkinDiagram(DynkinType::C, 4, {1})) == 7);
    CHECK(is_projective_space(MarkedDynkinDiagram(DynkinType::C, 2, {1})) == 3);
    CHECK(!is_projective_space(MarkedDynkinDiagram(DynkinType::B, 3, {1})).has_value());
    CHECK(!is_projective_space(MarkedDynkinDiagram(DynkinType::A, 4, {2})).has_value());
    CHECK(!is_projective_space(MarkedDynkinDiagram(DynkinType::C, 3, {3})).has_value());
    CHECK(!is_projective_space(MarkedDynkinDiagram(DynkinType::B, 2, {2})).has_value());
    // dimension consistency wherever a value is returned
    for (auto [t, n] : legal_diagrams(8))
        for (int a = 1; a <= n; ++a) {
            MarkedDynkinDiagram d(t, n, {a});
            auto r = is_projective_space(d);
            if (r) CHECK(dim_G_mod_P(d) == *r);
        }
}

TEST_CASE("maximal parabolic classification") {
    auto v1 = classify_max_parabolic_quotients(MarkedDynkinDiagram(DynkinType::A, 3, {1}));
    CHECK(v1.cls == QuotientClass::ProjSpace);
    CHECK(v1.n == 3);
    auto v2 = classify_max_parabolic_quotients(MarkedDynkinDiagram(DynkinType::A, 2, {1, 2}));
    CHECK(v2.cls == QuotientClass::Incidence);
    CHECK(v2.n == 2);
    auto v3 = classify_max_parabolic_quotients(MarkedDynkinDiagram(DynkinType::B, 2, {2}));
    CHECK(v3.cls == QuotientClass::Neither);
    auto v4 = classify_max_parabolic_quotients(MarkedDynkinDiagram(DynkinType::A, 4, {1, 2}));
    CHECK(v4.cls == QuotientClass::Neither);
    auto v5 = classify_max_parabolic_quotients(MarkedDynkinDiagram(DynkinType::A, 5, {1, 5}));
    CHECK(v5.cls == QuotientClass::Incidence);
    CHECK(v5.n == 5);
}

TEST_CASE("exhaustive sweep matches the classification, rank <= 6") {
    for (auto [t, n] : legal_diagrams(6)) {
        for (int a = 1; a <= n; ++a) {
            bool expect = (t == DynkinType::A && (a == 1 || a == n)) ||
                          (t == DynkinType::C && a == 1);
            CHECK(is_projective_space(MarkedDynkinDiagram(t, n, {a})).has_value() == expect);
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto v = classify_max_parabolic_quotients(MarkedDynkinDiagram(t, n, {i, j}));
                bool expect_inc = t == DynkinType::A && i == 1 && j == n;
                CHECK((v.cls == QuotientClass::Incidence) == expect_inc);
            }
    }
}

TEST_CASE("diagram parsing and validation") {
    auto d = MarkedDynkinDiagram::parse("A3:1");
    CHECK(d.type == DynkinType::A);
    CHECK(d.rank == 3);
    CHECK(d.marked == std::set<int>{1});
    auto d2 = MarkedDynkinDiagram::parse("A2:1,2");
    CHECK(d2.marked.size() == 2);
    CHECK(MarkedDynkinDiagram::parse("C4:1").to_string() == "C4:1");
    CHECK_THROWS_AS(MarkedDynkinDiagram::parse("D3:1"), std::invalid_argument);
    CHECK_THROWS_AS(MarkedDynkinDiagram::parse("E9:1"), std::invalid_argument);
    CHECK_THROWS_AS(MarkedDynkinDiagram::parse("A3:7"), std::invalid_argument);
}
