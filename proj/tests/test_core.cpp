#include <doctest.h>

#include "support.hpp"

using namespace ldp;
using ldp::test::ws;

TEST_SUITE("core") {

TEST_CASE("normalize sorts and rejects non-primitive systems")
{
    CHECK(WeightSystem::normalize({5, 3, 2, 9}).values() == std::array<Int, 4>{2, 3, 5, 9});
    CHECK(WeightSystem::normalize({1, 1, 1, 1}).values() == std::array<Int, 4>{1, 1, 1, 1});
    CHECK_THROWS_AS(WeightSystem::normalize({2, 4, 6, 8}), InvalidInput);
    CHECK_THROWS_AS(WeightSystem::normalize({0, 1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(WeightSystem::normalize({-1, 1, 2, 3}), InvalidInput);
}

TEST_CASE("well-formedness is coprimality of every triple")
{
    CHECK(is_well_formed(ws(1, 2, 3, 5)));
    CHECK_FALSE(is_well_formed(ws(2, 2, 2, 3)));
    CHECK(is_well_formed(ws(6, 9, 10, 13)));
    CHECK_FALSE(is_well_formed(ws(2, 4, 6, 7)));
}

TEST_CASE("monomials of a degree")
{
    CHECK(monomials_of_degree(ws(1, 1, 1, 1), 3).size() == 20);
    CHECK(monomials_of_degree(ws(2, 3, 5, 9), 18).size() == 13);
    CHECK(monomials_of_degree(ws(2, 3, 5, 9), 1).empty());
    for (const auto& a : monomials_of_degree(ws(2, 3, 5, 9), 18))
        CHECK(weighted_degree(ws(2, 3, 5, 9), a) == 18);
    CHECK(count_monomials(ws(1, 1, 1, 2), 4) == 22);
}

TEST_CASE("fano index and candidate construction")
{
    CHECK(fano_index(ws(1, 1, 1, 1), 3) == 1);
    CHECK(fano_index(ws(2, 3, 5, 9), 18) == 1);
    CHECK(fano_index(ws(1, 1, 1, 1), 2) == 2);
    const Candidate c = Candidate::with_index(ws(2, 3, 5, 9), 1);
    CHECK(c.degree() == 18);
    CHECK_THROWS_AS(Candidate::make(ws(2, 3, 5, 9), 19), InvalidInput);  // index 0
    CHECK_THROWS_AS(Candidate::make(ws(1, 2, 3, 5), 5), InvalidInput);   // linear cone
    CHECK_THROWS_AS(Candidate::make(ws(1, 2, 3, 5), 0), InvalidInput);
}

TEST_CASE("representable degrees")
{
    const std::array<Int, 2> g{5, 19};
    CHECK(representable(24, g));
    CHECK(representable(0, g));
    CHECK_FALSE(representable(27, g));
    CHECK_FALSE(representable(3, g));
}

}
