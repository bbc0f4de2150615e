#include "doctest.h"
#include <sstream>
#include <stdexcept>
#include "flift/fano.hpp"

using namespace flift;

TEST_CASE("chi(T) from invariants") {
    // P^3: half of 64, minus 18, plus 1
    CHECK(fano_chi_tangent({"1.17", 1, 64, 0, ""}) == 15);
    // the quadric threefold: dim SO_5 = 10
    CHECK(fano_chi_tangent({"1.15", 1, 54, 0, ""}) == 10);
    // the sextic double solid
    CHECK(fano_chi_tangent({"1.1", 1, 2, 104, ""}) == -68);
}

TEST_CASE("validation of rows") {
    FanoInvariants bad{"x", 1, 2, 3, ""};   // odd b3
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    FanoInvariants bad2{"x", 1, -2, 0, ""};
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("csv parsing") {
    std::stringstream csv;
    csv << "id,rho,minusK3,b3,category\n"
        << "# comment line\n"
        << "1.17,1,64,0,toric\n"
        << "2.27,2,38,0,other\n";
    auto rows = parse_fano_csv(csv);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].id == "1.17");
    CHECK(rows[1].category == "other");
    auto rep = fano_rigidity_screen(rows);
    CHECK(rep.rows[0].chi_tangent == 15);
    CHECK(!rep.rows[0].flagged_nonrigid);
    CHECK(rep.rows[1].requires_external);
    REQUIRE(rep.partition.size() == 2);
    CHECK(rep.partition[0].first == "toric");

    std::stringstream bad;
    bad << "id,rho,minusK3,b3\n1.1,not_a_number,2,104\n";
    CHECK_THROWS_AS(parse_fano_csv(bad), std::invalid_argument);
}

TEST_CASE("screen flags negative chi") {
    std::vector<FanoInvariants> rows = {
        {"1.1", 1, 2, 104, "negative"},
        {"1.10", 1, 22, 0, "negative"},
        {"1.16", 1, 40, 0, "bott"},
        {"2.32", 2, 48, 0, "other"},
    };
    auto rep = fano_rigidity_screen(rows);
    CHECK(rep.negative_ids == std::vector<std::string>{"1.1", "1.10"});
    CHECK(rep.rows[2].chi_tangent == 3);       // quintic del Pezzo V_5
    CHECK(rep.rows[3].chi_tangent == 8);
    CHECK(rep.rows[3].requires_external);
}
