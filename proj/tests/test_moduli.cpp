#include <doctest.h>

#include "support.hpp"

#include "ldp/catalog.hpp"
#include "ldp/moduli.hpp"

using namespace ldp;
using ldp::test::cand;
using ldp::test::ws;

TEST_SUITE("moduli") {

TEST_CASE("monomial dimension")
{
    CHECK(monomial_dimension(cand({1, 1, 1, 2}, 4)) == 22);
    CHECK(monomial_dimension(cand({2, 3, 5, 9}, 18)) == 13);
    CHECK(monomial_dimension(cand({3, 4, 10, 15}, 30)) == 10);
    CHECK(monomial_dimension(cand({1, 1, 1, 1}, 3)) == 20);
    CHECK_THROWS_AS(monomial_dimension(cand({2, 3, 4, 5}, 13)), PreconditionError);
}

TEST_CASE("automorphism group dimension")
{
    CHECK(aut_dimension(ws(1, 1, 1, 1)) == 16);
    CHECK(aut_dimension(ws(1, 1, 2, 3)) == 15);
    CHECK(aut_dimension(ws(2, 3, 5, 9)) == 8);
}

TEST_CASE("moduli dimension")
{
    CHECK(moduli_dimension(cand({1, 1, 2, 3}, 6)) == 8);
    CHECK(moduli_dimension(cand({2, 3, 5, 9}, 18)) == 5);
    CHECK(moduli_dimension(cand({3, 3, 5, 5}, 15)) == 2);
    CHECK(moduli_report(cand({1, 1, 1, 1}, 3)) == ModuliReport{20, 16, 4});
    CHECK(moduli_report(cand({1, 1, 1, 2}, 4)) == ModuliReport{22, 16, 6});
    CHECK(moduli_report(cand({1, 1, 2, 3}, 6)) == ModuliReport{23, 15, 8});
    // the moduli-table series row at k = 1: printed n = 5
    CHECK(moduli_report(cand({2, 3, 3, 5}, 12)) == ModuliReport{12, 8, 4});
}

TEST_CASE("minimal torus")
{
    CHECK(is_minimal_torus(ws(5, 19, 27, 31)));
    CHECK_FALSE(is_minimal_torus(ws(1, 1, 2, 3)));
    CHECK_FALSE(is_minimal_torus(ws(2, 3, 5, 9)));
}

}
