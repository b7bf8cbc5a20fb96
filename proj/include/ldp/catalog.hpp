#pragma once

#include "ldp/affine.hpp"
#include "ldp/core.hpp"
#include "ldp/record.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ldp {

/// A transcribed sporadic or classical row.
struct ReferenceRow {
    std::string source_table;  // "table1", "table2"
    Int index = 0;
    std::array<Int, 4> weights{};
    Int degree = 0;
    std::optional<Int> b2_printed;
    std::optional<bool> ke_yes;  // "Y" / "?"; absent for table2
    // Printed moduli anchors (table2 rows only).
    std::optional<Int> m_printed;
    std::optional<Int> dimg_printed;
    std::optional<Int> n_printed;
    std::string note;
};

/// One of the one-parameter families w_i(k), d(k), valid for k >= k_min
/// (the first k at which the written form is ascending).
struct ReferenceSeries {
    std::string id;
    Int index = 0;
    std::array<AffineForm, 4> weights{};
    AffineForm degree;
    Int b2_printed = 0;
    bool ke_yes = false;
    KltProvenance provenance = KltProvenance::kUnknown;
    /// For kProved: smallest k covered by the argument.
    Int proved_from_k = 0;
    Int k_min = 1;

    std::array<Int, 4> weights_at(Int k) const;
    Int degree_at(Int k) const { return degree.at(k); }
    /// "(6,6k+5,12k+8,18k+15)".
    std::string label() const;
    /// K-E = Y holds at this k (cascade or curated range).
    bool ke_yes_at(Int k) const;
};

/// A row of the moduli table; `series_id` set for the parametric row.
struct ModuliRow {
    Int index = 0;
    std::array<Int, 4> weights{};  // unused when series_id is set
    Int degree = 0;
    std::optional<std::string> series_id;
    Int m_printed = 0;
    Int n_printed = 0;
    Int l_printed = 0;
};

/// "l admits `count` structures with n-dimensional moduli", or, when n is
/// absent, `count` countably infinite (series) families.
struct TheoremAClaim {
    Int l = 0;
    std::optional<Int> n;
    Int count = 0;
};

struct KnownDiscrepancy {
    std::string key;
    std::string description;
};

class Catalog {
public:
    /// The catalog compiled into the library from data/reference.csv.
    static const Catalog& builtin();
    static Catalog parse(std::string_view text);
    static Catalog load(const std::filesystem::path& path);

    std::vector<ReferenceRow> table1;
    std::vector<ReferenceRow> table2;
    std::vector<ReferenceSeries> series;
    /// Families the enumeration produces that the published series omit.
    std::vector<ReferenceSeries> unlisted;
    std::vector<ModuliRow> table3;
    std::vector<TheoremAClaim> theorem_a;
    std::vector<KnownDiscrepancy> known;

    /// Looks in both the published and the unlisted families.
    const ReferenceSeries* find_series(std::string_view id) const;
    const KnownDiscrepancy* find_known(std::string_view key) const;
    const ReferenceRow* find_table1(const Candidate& c) const;
};

/// The unique (family, k) among `families` reproducing c's weights and
/// degree. Throws InvariantViolation on two matches.
std::optional<SeriesTag> match_family(const Candidate& c, const std::vector<ReferenceSeries>& families);

const std::vector<ReferenceRow>& reference_table1();
const std::vector<ReferenceSeries>& reference_series();

/// Result of comparing computed records with the transcribed tables.
struct ReconciliationReport {
    struct FieldMismatch {
        std::string row;  // "(2,3,5,9) d=18"
        std::string field;
        std::string printed;
        std::string computed;
        std::string key;  // stable identifier matched against KnownDiscrepancy
    };

    struct ExtraRecord {
        CandidateRecord record;
        std::optional<SeriesTag> unlisted;  // member of a documented unlisted family
    };

    Int matched = 0;  // printed rows found (weights and degree)
    Int exact = 0;    // of those, printed b2 and K-E also agree
    Int expected = 0;
    std::vector<ReferenceRow> missing;
    std::vector<ExtraRecord> extra;
    std::vector<FieldMismatch> mismatches;

    bool empty() const { return missing.empty() && extra.empty() && mismatches.empty(); }
};

/// Compares sporadic records against table 1 and series-tagged records
/// against their family's printed b2 and K-E flag.
ReconciliationReport diff_against_reference(const std::vector<CandidateRecord>& computed, const Catalog& catalog);

struct TallyEntry {
    std::optional<std::string> series_id;  // set for a countably infinite family
    Int n = 0;
    std::string label;
    bool operator==(const TallyEntry&) const = default;
};

/// K-E = Y records grouped by l; one entry per sporadic row and per series
/// family (n taken from its smallest-k Y instance).
std::map<Int, std::vector<TallyEntry>> theorem_a_tally(const std::vector<CandidateRecord>& computed);

}  // namespace ldp
