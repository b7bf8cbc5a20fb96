#pragma once

#include "ldp/affine.hpp"
#include "ldp/catalog.hpp"
#include "ldp/core.hpp"
#include "ldp/quasismooth.hpp"
#include "ldp/record.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ldp {

inline constexpr Int kDefaultMaxWeight = 150;

/// Deliberate defects for exercising the cross-check between the two
/// search methods. Only ever applied to the structured path.
enum class FaultInjection {
    kNone,
    kSkipConditionII,
};

struct SearchOptions {
    unsigned threads = 1;
    PairRule pair_rule = PairRule::kLiteral;
    FaultInjection fault = FaultInjection::kNone;
};

/// Well-formed, quasi-smooth and past both gates (2I < 3w0, 2I != w0+w1).
bool passes_filters(const Candidate& c, const SearchOptions& opts = {});

/// Every candidate with ascending primitive weights <= w_max and index in
/// [i_min, i_max] that passes the filters, found by exhaustive search.
/// Ordered by index, then weights.
std::vector<Candidate> brute_force_candidates(Int i_min, Int i_max, Int w_max, const SearchOptions& opts = {});

/// The choice (m_i, j(i)), i = 1..3, of the monomials z_i^{m_i} z_{j(i)}.
struct BranchAssignment {
    Int index = 1;
    std::array<Int, 3> m{1, 1, 1};  // m_1, m_2, m_3
    std::array<int, 3> j{0, 0, 0};  // j(1), j(2), j(3)
    bool operator==(const BranchAssignment&) const = default;
};

inline constexpr Int kMaxM1 = 10;
inline constexpr Int kMaxM2 = 4;
inline constexpr Int kMaxM3 = 2;

/// All 2*4*10*4^3 branches for the given index.
std::vector<BranchAssignment> lemma42_branches(Int index);

/// Integer one-parameter family w_i(k), d(k) for k in [k_min, k_max]
/// (k_max absent: unbounded above).
struct AffineFamily {
    std::array<AffineForm, 4> w{};
    AffineForm d;
    Int k_min = 0;
    std::optional<Int> k_max;
    int j0 = 0;  // z_0^{m_0(k)} z_{j0} closes the i = 0 equation

    std::array<Int, 4> weights_at(Int k) const;
    bool operator==(const AffineFamily&) const = default;
};

/// Solutions of the branch's three equations plus the i = 0 equation, on
/// the ascending positive lattice with d > w3.
struct SolutionSpace {
    std::vector<std::array<Int, 4>> points;
    std::vector<AffineFamily> families;

    bool empty() const { return points.empty() && families.empty(); }
    /// Every weight system in the space with all weights <= w_max, sorted
    /// and without duplicates.
    std::vector<std::array<Int, 4>> instantiate(Int w_max) const;
};

/// Rank-deficient systems are sliced along a free weight, which is where
/// w_max enters; points found by finite search are also capped by it.
SolutionSpace solve_condition_system(const BranchAssignment& b, Int w_max);

/// Union of the filtered branch solutions for one index.
std::vector<Candidate> structured_candidates(Int index, Int w_max, const SearchOptions& opts = {});

/// The unique catalog family and k reproducing c. Throws InvariantViolation
/// when two (family, k) pairs match.
std::optional<SeriesTag> match_series(const Candidate& c, const Catalog& catalog = Catalog::builtin());

/// Computes every invariant of c and tags it against the catalog.
CandidateRecord make_record(const Candidate& c, const Catalog& catalog = Catalog::builtin(),
                            PairRule rule = PairRule::kLiteral);

std::vector<CandidateRecord> make_records(const std::vector<Candidate>& cs, const Catalog& catalog = Catalog::builtin(),
                                          const SearchOptions& opts = {});

std::vector<CandidateRecord> brute_force_enumerate(Int i_min, Int i_max, Int w_max, const SearchOptions& opts = {});
std::vector<CandidateRecord> structured_enumerate(Int index, Int w_max, const SearchOptions& opts = {});

}  // namespace ldp
