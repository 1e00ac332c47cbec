#include <doctest.h>

#include <fstream>
#include <sstream>

#include "quandlink/errors.hpp"
#include "quandlink/quandle.hpp"
#include "test_support.hpp"

using namespace quandlink;
using quandlink::testing::dihedral3;
using quandlink::testing::isomorphic;

TEST_CASE("trivial quandle matrices") {
    CHECK(make_trivial(2).matrix().entries() == std::vector<int>{1, 1, 2, 2});
    CHECK(make_trivial(1).matrix().entries() == std::vector<int>{1});
    CHECK(verify_quandle(make_trivial(4).matrix()).ok());
    CHECK_THROWS_AS(make_trivial(0), std::invalid_argument);
}

TEST_CASE("X_n matrices match the defining table") {
    CHECK(make_xn(2).matrix().entries() == std::vector<int>{1, 1, 2, 2, 2, 1, 3, 3, 3});
    const Quandle x3 = make_xn(3);
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) CHECK(x3.op(a, b) == a);
        CHECK(x3.op(a, 4) == a % 3 + 1);
    }
    for (int b = 1; b <= 4; ++b) CHECK(x3.op(4, b) == 4);
    CHECK_THROWS_AS(make_xn(1), std::invalid_argument);
    CHECK_THROWS_AS(make_xn(0), std::invalid_argument);
}

TEST_CASE("X_n passes the axiom checker for n in 2..32") {
    for (int n = 2; n <= 32; ++n) {
        const Quandle q = make_xn(n);
        CHECK(verify_quandle(q.matrix()).ok());
        // columns are permutations and the diagonal is the identity
        for (int a = 1; a <= q.order(); ++a) CHECK(q.op(a, a) == a);
    }
}

TEST_CASE("dual tables undo the operation") {
    for (const Quandle& q : {make_xn(2), make_xn(5), make_trivial(4), dihedral3()}) {
        for (int a = 1; a <= q.order(); ++a)
            for (int b = 1; b <= q.order(); ++b) {
                CHECK(q.inv(q.op(a, b), b) == a);
                CHECK(q.op(q.inv(a, b), b) == a);
            }
    }
}

TEST_CASE("singleton matrix is a quandle") {
    auto ver = verify_quandle(OperationMatrix(1, {1}));
    REQUIRE(ver.ok());
    CHECK(ver.quandle->order() == 1);
}

TEST_CASE("corrupting X_2 at (1,3) breaks column 3") {
    OperationMatrix m = make_xn(2).matrix();
    m.set(1, 3, 1); // was 2
    auto ver = verify_quandle(m);
    REQUIRE_FALSE(ver.ok());
    bool found = false;
    for (const auto& v : ver.violations)
        if (v.axiom == QuandleAxiom::RightInvertibility && v.b == 3) found = true;
    CHECK(found);
}

TEST_CASE("out-of-range entries are a malformed matrix, not an axiom violation") {
    CHECK_THROWS_AS(OperationMatrix(2, {1, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(OperationMatrix(2, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("orbit decompositions") {
    SUBCASE("X_5 splits into {1..5} and {6}") {
        auto d = orbits(make_xn(5));
        REQUIRE(d.orbits.size() == 2);
        CHECK(d.orbits[0] == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(d.orbits[1] == std::vector<int>{6});
        for (int a = 1; a <= 5; ++a) CHECK(d.orbit_of[a] == 0);
        CHECK(d.orbit_of[6] == 1);
    }
    SUBCASE("T_4 is four singletons") {
        auto d = orbits(make_trivial(4));
        CHECK(d.orbits.size() == 4);
        for (const auto& orbit : d.orbits) CHECK(orbit.size() == 1);
    }
    SUBCASE("T_1 is one orbit") { CHECK(orbits(make_trivial(1)).orbits.size() == 1); }
    SUBCASE("X_n has orbits {1..n} and {n+1} for n up to 8") {
        for (int n = 2; n <= 8; ++n) {
            auto d = orbits(make_xn(n));
            REQUIRE(d.orbits.size() == 2);
            CHECK(d.orbits[0].size() == static_cast<std::size_t>(n));
            CHECK(d.orbits[1] == std::vector<int>{n + 1});
        }
    }
}

TEST_CASE("connectedness") {
    CHECK(is_connected(make_trivial(1)));
    CHECK_FALSE(is_connected(make_trivial(2)));
    CHECK_FALSE(is_connected(make_xn(2)));
    CHECK_FALSE(is_connected(make_xn(7)));
    CHECK(is_connected(dihedral3()));
}

TEST_CASE("trivial orbit quandles") {
    CHECK(is_trivial_orbit_quandle(make_xn(2)));
    CHECK(is_trivial_orbit_quandle(make_xn(6)));
    CHECK(is_trivial_orbit_quandle(make_trivial(5)));
    CHECK_FALSE(is_trivial_orbit_quandle(dihedral3()));
}

TEST_CASE("orbit subquandles of X_n are trivial quandles") {
    for (int n = 2; n <= 5; ++n) {
        const Quandle q = make_xn(n);
        auto d = orbits(q);
        CHECK(isomorphic(subquandle(q, d.orbits[0]), make_trivial(n)));
        CHECK(isomorphic(subquandle(q, d.orbits[1]), make_trivial(1)));
    }
    CHECK_FALSE(isomorphic(dihedral3(), make_trivial(3)));
}

TEST_CASE("subquandle rejects non-closed subsets") {
    CHECK_THROWS_AS(subquandle(make_xn(3), {1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(subquandle(make_xn(3), {}), std::invalid_argument);
}

TEST_CASE("matrix file parsing") {
    SUBCASE("comments and layout") {
        std::istringstream in("# a comment\n3\n1 1 1\n2 2 2\n3 3 3  # trailing\n");
        OperationMatrix m = read_operation_matrix(in);
        CHECK(m == make_trivial(3).matrix());
    }
    SUBCASE("entry out of range") {
        std::istringstream in("2\n1 1\n2 5\n");
        CHECK_THROWS_AS(read_operation_matrix(in), ParseError);
    }
    SUBCASE("truncated") {
        std::istringstream in("3\n1 1 1\n");
        CHECK_THROWS_AS(read_operation_matrix(in), ParseError);
    }
    SUBCASE("trailing data") {
        std::istringstream in("1\n1 9\n");
        CHECK_THROWS_AS(read_operation_matrix(in), ParseError);
    }
    SUBCASE("garbage token") {
        std::istringstream in("2\n1 x\n2 2\n");
        CHECK_THROWS_AS(read_operation_matrix(in), ParseError);
    }
    SUBCASE("data files load") {
        std::ifstream x3(std::string(QUANDLINK_DATA_DIR) + "/x3.quandle");
        REQUIRE(x3.good());
        CHECK(read_operation_matrix(x3) == make_xn(3).matrix());

        std::ifstream bad(std::string(QUANDLINK_DATA_DIR) + "/bad_x2.quandle");
        REQUIRE(bad.good());
        auto ver = verify_quandle(read_operation_matrix(bad));
        CHECK_FALSE(ver.ok());
    }
}

TEST_CASE("violation descriptions name the axiom") {
    OperationMatrix m = make_trivial(3).matrix();
    m.set(2, 2, 1);
    auto ver = verify_quandle(m);
    REQUIRE_FALSE(ver.ok());
    bool idem = false;
    for (const auto& v : ver.violations) {
        if (v.axiom == QuandleAxiom::Idempotence) {
            idem = true;
            CHECK(v.a == 2);
            CHECK(v.describe().find("axiom (i)") != std::string::npos);
        }
    }
    CHECK(idem);
}
