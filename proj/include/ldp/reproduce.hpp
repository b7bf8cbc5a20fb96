#pragma once

#include "ldp/catalog.hpp"
#include "ldp/record.hpp"

#include <string>
#include <vector>

namespace ldp {

/// A deviation from the printed tables, with whether the catalog documents it.
struct Deviation {
    std::string key;
    std::string what;
    bool documented = false;
};

struct ReproductionResult {
    std::vector<std::string> lines;  // human report, one line each
    std::vector<Deviation> deviations;
    std::string summary;

    /// True iff every deviation is documented in the catalog.
    bool ok() const;
    std::string text() const;
};

/// Sporadic rows: enumerated records against the transcribed table.
ReproductionResult reproduce_table1(const std::vector<CandidateRecord>& records, const Catalog& catalog);

/// Moduli rows; the series row is evaluated at its first admissible k. With
/// `records`, also lists K-E = Y sporadic records of positive moduli that
/// the table omits.
ReproductionResult reproduce_table3(const Catalog& catalog, const std::vector<CandidateRecord>* records = nullptr);

/// Every published family at its first `count` admissible k: filters, b2,
/// K-E flag and series tagging.
ReproductionResult reproduce_series(const Catalog& catalog, Int count = 5);

/// Tally of K-E = Y records by link type against the published counts.
ReproductionResult reproduce_theorem_a(const std::vector<CandidateRecord>& records, const Catalog& catalog);

}  // namespace ldp
