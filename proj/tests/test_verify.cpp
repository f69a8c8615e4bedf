#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencluster/sl2.hpp"
#include "gencluster/sl3.hpp"
#include "gencluster/verify.hpp"

using namespace gencluster;

TEST_CASE("phi at l = 2: the rank-1 algebra") {
    VerifyReport rep = verify_phi(2, 6);
    for (const auto& f : rep.failures) INFO(f);
    CHECK(rep.ok());
    CHECK(rep.variables_checked > 0);
    CHECK(rep.relations_checked > 0);
    CHECK(rep.standard_checked > 0);
    CHECK(rep.simple_checked > 0);
    // the single exchange relation x x' = 2 + lambda maps to
    // [L(Y0)][L(Y2)] = 2 + [z], checked independently here
    Sl2Ring ring(2);
    auto lhs = ring.kr_character({0, 1}) * ring.kr_character({1, 1});
    auto rhs = LaurentPoly::constant(ring.table(), 2) + ring.z_character();
    CHECK(lhs == rhs);
}

TEST_CASE("phi at l = 3 and l = 4") {
    for (int l : {3, 4}) {
        VerifyReport rep = verify_phi(l, 5);
        for (const auto& f : rep.failures) INFO(f);
        CHECK(rep.ok());
        // n initial variables + lambda are bound, all orbits checked:
        // l(l-1) diagonals and l sides of each parity class
        CHECK(rep.variables_checked >= l * (l - 1));
        CHECK(rep.relations_checked > 0);
    }
}

TEST_CASE("eta over the G2 algebra") {
    VerifyReport rep = verify_eta(5);
    for (const auto& f : rep.failures) INFO(f);
    CHECK(rep.ok());
    CHECK(rep.variables_checked == 8);   // the full 8-cycle of mutations
    CHECK(rep.relations_checked >= 8);
    CHECK(rep.standard_checked > 0);
    CHECK(rep.simple_checked > 0);
}

TEST_CASE("report serialization") {
    VerifyReport rep = verify_phi(2, 3);
    auto j = rep.to_json();
    CHECK(j["theorem"] == "phi");
    CHECK(j["l"] == 2);
    CHECK(j["ok"] == true);
    CHECK(j["failures"].empty());
    CHECK(j["variables_checked"].get<int>() == rep.variables_checked);
}
