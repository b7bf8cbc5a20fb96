#pragma once

#include "ldp/core.hpp"
#include "ldp/klt.hpp"
#include "ldp/moduli.hpp"
#include "ldp/topology.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ldp {

/// Where a "K-E = Y" conclusion comes from.
enum class KltProvenance {
    kCascade,  ///< machine-checked: the inequality cascade certified it
    kProved,   ///< curated: series family proved klt from a minimal k on
    kCited,    ///< curated: series family taken from the index-1 literature
    kUnknown,  ///< no sufficiency argument available
};

std::string_view provenance_id(KltProvenance p);
std::optional<KltProvenance> parse_provenance(std::string_view id);

struct SeriesTag {
    std::string id;
    Int k = 0;
    bool operator==(const SeriesTag&) const = default;
};

/// One enumerated hypersurface with every derived invariant attached.
struct CandidateRecord {
    Candidate candidate;
    Int orbifold_b2 = 0;
    Int b2_link = 0;
    Int l = 0;
    Int mu = 0;
    VirtualCharacter divisor;
    KltVerdict klt;
    KltProvenance provenance = KltProvenance::kUnknown;
    ModuliReport moduli;
    std::optional<SeriesTag> series;

    /// K-E column would read "Y".
    bool ke_yes() const { return provenance != KltProvenance::kUnknown; }

    bool operator==(const CandidateRecord&) const = default;
};

}  // namespace ldp
