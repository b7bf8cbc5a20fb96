#include <doctest.h>

#include "support.hpp"

#include "ldp/klt.hpp"

using namespace ldp;
using ldp::test::cand;
using ldp::test::ws;

TEST_SUITE("klt") {

TEST_CASE("gates")
{
    for (Int k = 2; k <= 6; ++k) {
        const auto g = gate_check(cand({1, 1, k, k}, 2 * k));
        REQUIRE(g);
        CHECK(*g == Gate::kIndexAtLeastThreeHalvesW0);
    }
    // (I-n, I+n, w, w+n): at I = 2 the first gate already applies (4 >= 3)
    const auto first = gate_check(cand({1, 3, 5, 6}, 13));
    REQUIRE(first);
    CHECK(*first == Gate::kIndexAtLeastThreeHalvesW0);
    const auto g52 = gate_check(cand({3, 5, 7, 8}, 19));
    REQUIRE(g52);
    CHECK(*g52 == Gate::kIndexMeanOfW0W1);
    CHECK_FALSE(gate_check(cand({2, 3, 5, 9}, 18)));
}

TEST_CASE("line and vertex tests")
{
    CHECK(line_23_free(ws(2, 3, 5, 9), 18));
    CHECK_FALSE(line_23_free(ws(9, 11, 12, 17), 45));
    CHECK(line_23_free(ws(1, 1, 1, 1), 3));
    CHECK(vertex_3_free(ws(2, 3, 5, 9), 18));
    CHECK(vertex_3_free(ws(1, 2, 3, 5), 10));
    CHECK_FALSE(vertex_3_free(ws(5, 7, 11, 13), 33));
}

TEST_CASE("cascade")
{
    const auto v = certify_ke(cand({2, 3, 5, 9}, 18));
    CHECK(v == KltVerdict::certified(CascadeRule::kR3, 36, 54));
    CHECK(describe(v) == "Certified (rule R3: 36 < 54)");
    CHECK(describe(certify_ke(cand({1, 2, 3, 5}, 10))) == "Unknown");
    CHECK(describe(certify_ke(Candidate::with_index(ws(1, 1, 4, 4), 2))) == "NotKlt (gate 5.1: 2I ≥ 3w0)");
    // near-equality rows
    CHECK(certify_ke(cand({5, 13, 19, 35}, 70)) == KltVerdict::certified(CascadeRule::kR2, 280, 285));
    CHECK(certify_ke(Candidate::with_index(ws(11, 13, 19, 25), 5)).kind == KltVerdict::Kind::kUnknown);
}

TEST_CASE("strict inequality at 2Id = 3 w0 w2")
{
    // (4,2k+1,4k+2,6k+1), d = 12k+6; the written form is ascending from k = 2
    const Candidate c = cand({4, 5, 10, 13}, 30);
    CHECK(2 * c.index() * c.degree() == 120);
    CHECK(3 * 4 * 10 == 120);
    CHECK(certify_ke(c).kind == KltVerdict::Kind::kUnknown);
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(certify_ke(cand({2, 3, 4, 5}, 13)), PreconditionError);
    CHECK_THROWS_AS(certify_ke(cand({2, 4, 6, 7}, 12)), PreconditionError);  // not well-formed
}

TEST_CASE("klt_local_bound")
{
    CHECK(klt_local_bound({Rational(5, 7), 7, 24, 2, {3, 7, 12}}));
    CHECK_FALSE(klt_local_bound({Rational(1), 1, 1, 1, {1, 1, 1}}));
    CHECK_FALSE(klt_local_bound({Rational(2, 3), 1, 3, 1, {1, 1, 1}}));
    CHECK_THROWS_AS(klt_local_bound({Rational(0), 1, 1, 1, {1, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(klt_local_bound({Rational(3, 2), 1, 1, 1, {1, 1, 1}}), InvalidInput);
}

TEST_CASE("identifier round trips")
{
    for (Gate g : {Gate::kIndexAtLeastThreeHalvesW0, Gate::kIndexMeanOfW0W1})
        CHECK(parse_gate(gate_id(g)) == g);
    for (CascadeRule r : {CascadeRule::kR1, CascadeRule::kR2, CascadeRule::kR3})
        CHECK(parse_rule(rule_id(r)) == r);
    CHECK_FALSE(parse_rule("R4"));
}

}
