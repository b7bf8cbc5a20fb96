#include <doctest.h>

#include "support.hpp"

#include "ldp/catalog.hpp"
#include "ldp/klt.hpp"
#include "ldp/quasismooth.hpp"
#include "ldp/reproduce.hpp"
#include "ldp/search.hpp"

#include <algorithm>
#include <string>

using namespace ldp;
using ldp::test::cand;

namespace {

const std::string kHeader =
    "source_table,index,w0,w1,w2,w3,degree,b2_printed,ke_flag,series_id,k,provenance,m_printed,dimg_printed,n_printed,"
    "l_printed,count,note\n";

std::vector<CandidateRecord> table1_records()
{
    std::vector<CandidateRecord> out;
    for (const auto& row : Catalog::builtin().table1)
        out.push_back(make_record(cand(row.weights, row.degree)));
    return out;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("transcribed sporadic rows")
{
    const auto& t1 = reference_table1();
    CHECK(t1.size() == 73);
    const std::array<Int, 10> per_index{19, 25, 7, 10, 3, 3, 1, 2, 1, 2};
    for (Int i = 1; i <= 10; ++i)
        CHECK(std::count_if(t1.begin(), t1.end(), [&](const ReferenceRow& r) { return r.index == i; }) ==
              per_index[i - 1]);
    const ReferenceRow* big = Catalog::builtin().find_table1(cand({11, 49, 69, 128}, 256));
    REQUIRE(big);
    CHECK(big->b2_printed == 2);
    CHECK(big->ke_yes == true);
}

TEST_CASE("transcription self-consistency")
{
    for (const auto& row : reference_table1()) {
        CAPTURE(row.weights);
        const Candidate c = cand(row.weights, row.degree);
        CHECK(c.index() == row.index);
        CHECK(is_well_formed(c.weights()));
        CHECK(is_quasismooth(c.weights(), c.degree()));
        CHECK(passes_filters(c));
    }
}

TEST_CASE("published series")
{
    const auto& s = reference_series();
    CHECK(s.size() == 12);
    CHECK(std::count_if(s.begin(), s.end(), [](const ReferenceSeries& f) { return f.index == 4; }) == 3);
    CHECK(std::count_if(s.begin(), s.end(), [](const ReferenceSeries& f) { return f.index == 2; }) == 6);
    const auto* s2b = Catalog::builtin().find_series("S2b");
    REQUIRE(s2b);
    CHECK(s2b->provenance == KltProvenance::kCascade);
    const auto* s1a = Catalog::builtin().find_series("S1a");
    REQUIRE(s1a);
    CHECK(s1a->provenance == KltProvenance::kCited);
    CHECK(s1a->ke_yes);
    for (const auto& f : s)
        for (Int k = f.k_min; k < f.k_min + 5; ++k) {
            CAPTURE(f.id);
            CAPTURE(k);
            const Candidate c = cand(f.weights_at(k), f.degree_at(k));
            CHECK(c.weights().values() == f.weights_at(k));
            CHECK(passes_filters(c));
        }
}

TEST_CASE("K-E column: certified exactly on the Y rows")
{
    for (const auto& row : reference_table1()) {
        CAPTURE(row.weights);
        CHECK(certify_ke(cand(row.weights, row.degree)).is_certified() == row.ke_yes.value());
    }
}

TEST_CASE("diff against reference")
{
    Catalog cat = Catalog::builtin();
    cat.known.clear();
    auto recs = table1_records();

    // the table as printed, b2 aside
    auto rep = diff_against_reference(recs, cat);
    CHECK(rep.missing.empty());
    CHECK(rep.extra.empty());
    CHECK(rep.matched == 73);
    for (const auto& m : rep.mismatches)
        CHECK(m.field == "b2");
    CHECK(rep.mismatches.size() == 4);

    // overwrite the four disputed rows with their printed b2 to get an exact reproduction
    for (auto& r : recs)
        if (const auto* row = cat.find_table1(r.candidate))
            r.orbifold_b2 = *row->b2_printed;
    CHECK(diff_against_reference(recs, cat).empty());

    auto minus = recs;
    const auto dropped = minus.back().candidate;
    minus.pop_back();
    rep = diff_against_reference(minus, cat);
    REQUIRE(rep.missing.size() == 1);
    CHECK(rep.missing[0].weights == dropped.weights().values());
    CHECK(rep.mismatches.empty());

    auto flipped = recs;
    flipped[0].klt = flipped[0].klt.is_certified() ? KltVerdict::unknown() : KltVerdict::certified(CascadeRule::kR1, 1, 2);
    rep = diff_against_reference(flipped, cat);
    REQUIRE(rep.mismatches.size() == 1);
    CHECK(rep.mismatches[0].field == "ke");
}

TEST_CASE("link-type tally")
{
    CHECK(theorem_a_tally({}).empty());
    const auto tally = theorem_a_tally(test::full_enumeration());
    REQUIRE(tally.count(1));
    CHECK(tally.at(1).size() == 14);
    for (const auto& e : tally.at(1)) {
        CHECK_FALSE(e.series_id);
        CHECK(e.n == 0);
    }
}

TEST_CASE("known discrepancies")
{
    const auto& cat = Catalog::builtin();
    CHECK(cat.find_known("table3:S1a:n"));
    CHECK(cat.find_known("table1:(3,3,5,5) d=15:b2"));
    CHECK_FALSE(cat.find_known("table1:(2,3,5,9) d=18:b2"));
}

TEST_CASE("reproduce separates documented from new deviations")
{
    const auto recs = table1_records();
    const auto with = reproduce_table1(recs, Catalog::builtin());
    CHECK(with.ok());
    CHECK(with.summary.rfind("73/73 rows matched; 0 missing; 0 extra", 0) == 0);
    Catalog bare = Catalog::builtin();
    bare.known.clear();
    const auto without = reproduce_table1(recs, bare);
    CHECK_FALSE(without.ok());
    CHECK(without.text().find("NEW:") != std::string::npos);

    const auto t3 = reproduce_table3(Catalog::builtin());
    CHECK(t3.ok());
    CHECK(t3.summary.rfind("10/16 exact", 0) == 0);
    CHECK_FALSE(reproduce_table3(bare).ok());
    CHECK(reproduce_series(Catalog::builtin()).summary == "60/60 series instances match");
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(Catalog::parse(""), InvalidInput);
    CHECK_THROWS_AS(Catalog::parse("bogus,header\n"), InvalidInput);
    CHECK_THROWS_AS(Catalog::parse(kHeader + "table1,1,2,3,5,9\n"), InvalidInput);
    CHECK_THROWS_AS(Catalog::parse(kHeader + "table1,2,2,3,5,9,18,7,Y,,,,,,,,,\n"), InvalidInput);  // wrong index
    CHECK_THROWS_AS(Catalog::parse(kHeader + "table1,1,2,3,5,9,18,7,X,,,,,,,,,\n"), InvalidInput);
    CHECK_THROWS_AS(Catalog::parse(kHeader + "mystery,1,2,3,5,9,18,7,Y,,,,,,,,,\n"), InvalidInput);
    CHECK_THROWS_AS(Catalog::parse(kHeader + "series,1,2,2k+1,2k+1,4k+1,8k+4,8,?,S,1,cited,,,,,,\n"), InvalidInput);  // flag vs provenance
    CHECK_THROWS_AS(Catalog::parse(kHeader + "series,1,2,2k+1,2k+1,4k+1,8k+3,8,?,S,1,open,,,,,,\n"), InvalidInput);  // index
    CHECK_THROWS_AS(Catalog::parse(kHeader + "known,,,,,,,,,\"a,b,,,,,,,,x\n"), InvalidInput);
    const Catalog ok = Catalog::parse(kHeader + "table1,1,2,3,5,9,18,7,Y,,,,,,,,,\nknown,,,,,,,,,\"k,1\",,,,,,,,\"a \"\"b\"\"\"\n");
    CHECK(ok.table1.size() == 1);
    REQUIRE(ok.known.size() == 1);
    CHECK(ok.known[0].key == "k,1");
    CHECK(ok.known[0].description == "a \"b\"");
    CHECK_THROWS_AS(Catalog::load("/nonexistent/catalog.csv"), InvalidInput);
}

}
