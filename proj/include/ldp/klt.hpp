#pragma once

#include "ldp/core.hpp"
#include "ldp/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ldp {

/// Arithmetic conditions under which the klt sufficiency test provably fails.
enum class Gate {
    kIndexAtLeastThreeHalvesW0,  ///< 2I >= 3 w0
    kIndexMeanOfW0W1,            ///< 2I = w0 + w1
};

/// The three sufficiency inequalities, tried in this order.
enum class CascadeRule {
    kR1,  ///< 2Id < 3 w0 w1
    kR2,  ///< line z0 = z1 = 0 not contained, and 2Id < 3 w0 w2
    kR3,  ///< vertex (0,0,0,1) not contained, and 2Id < 3 w0 w3
};

struct KltVerdict {
    enum class Kind { kNotKltGate, kCertified, kUnknown };

    Kind kind = Kind::kUnknown;
    Gate gate = Gate::kIndexAtLeastThreeHalvesW0;  // only for kNotKltGate
    CascadeRule rule = CascadeRule::kR1;           // only for kCertified
    Int lhs = 0;                                   // 2Id, only for kCertified
    Int rhs = 0;                                   // 3 w0 w_k, only for kCertified

    static KltVerdict not_klt(Gate g);
    static KltVerdict certified(CascadeRule r, Int lhs, Int rhs);
    static KltVerdict unknown() { return {}; }

    bool is_certified() const { return kind == Kind::kCertified; }
    bool operator==(const KltVerdict& o) const;
};

std::string_view gate_id(Gate g);         // "2I>=3w0", "2I=w0+w1"
std::string_view gate_condition(Gate g);  // "2I ≥ 3w0", "2I = w0+w1"
std::string_view rule_id(CascadeRule r);  // "R1", "R2", "R3"
std::string_view kind_id(KltVerdict::Kind k);
std::optional<Gate> parse_gate(std::string_view id);
std::optional<CascadeRule> parse_rule(std::string_view id);
std::optional<KltVerdict::Kind> parse_kind(std::string_view id);

/// Human rendering: "Certified (rule R3: 36 < 54)", "Unknown",
/// "NotKlt (gate 5.1: 2I ≥ 3w0)".
std::string describe(const KltVerdict& v);

/// First firing gate, 2I >= 3w0 checked before 2I = w0 + w1.
std::optional<Gate> gate_check(const Candidate& c);

/// The general member avoids containing the line z0 = z1 = 0.
bool line_23_free(const WeightSystem& w, Int d);

/// The general member misses the vertex (0,0,0,1).
bool vertex_3_free(const WeightSystem& w, Int d);

/// Gates, then the R1 -> R2 -> R3 cascade; all inequalities strict.
/// Throws PreconditionError unless c is well-formed and quasi-smooth.
KltVerdict certify_ke(const Candidate& c);

/// The three weights whose product bounds each cascade rule: (w0,w1,w?) such
/// that 3 w0 w_k = rhs, expressed as the local-bound triple.
std::array<Int, 3> rule_triple(const WeightSystem& w, CascadeRule r);

/// Local klt bound at a point of orbifold order ell for the divisor multiple
/// alpha: alpha * ell * d * I < product(triple), evaluated exactly.
struct KltLocalQuery {
    Rational alpha;
    Int ell = 1;
    Int d = 1;
    Int index = 1;
    std::array<Int, 3> triple{1, 1, 1};
};

/// Throws InvalidInput unless 0 < alpha <= 1 and ell >= 1.
bool klt_local_bound(const KltLocalQuery& q);

}  // namespace ldp
