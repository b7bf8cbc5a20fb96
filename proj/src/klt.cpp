#include "ldp/klt.hpp"

#include "ldp/quasismooth.hpp"

#include <sstream>

namespace ldp {

KltVerdict KltVerdict::not_klt(Gate g)
{
    KltVerdict v;
    v.kind = Kind::kNotKltGate;
    v.gate = g;
    return v;
}

KltVerdict KltVerdict::certified(CascadeRule r, Int lhs, Int rhs)
{
    KltVerdict v;
    v.kind = Kind::kCertified;
    v.rule = r;
    v.lhs = lhs;
    v.rhs = rhs;
    return v;
}

bool KltVerdict::operator==(const KltVerdict& o) const
{
    if (kind != o.kind)
        return false;
    switch (kind) {
    case Kind::kNotKltGate:
        return gate == o.gate;
    case Kind::kCertified:
        return rule == o.rule && lhs == o.lhs && rhs == o.rhs;
    case Kind::kUnknown:
        return true;
    }
    return false;
}

std::string_view gate_id(Gate g)
{
    return g == Gate::kIndexAtLeastThreeHalvesW0 ? "2I>=3w0" : "2I=w0+w1";
}

std::string_view gate_condition(Gate g)
{
    return g == Gate::kIndexAtLeastThreeHalvesW0 ? "2I ≥ 3w0" : "2I = w0+w1";
}

std::string_view rule_id(CascadeRule r)
{
    switch (r) {
    case CascadeRule::kR1: return "R1";
    case CascadeRule::kR2: return "R2";
    case CascadeRule::kR3: return "R3";
    }
    return "?";
}

std::string_view kind_id(KltVerdict::Kind k)
{
    switch (k) {
    case KltVerdict::Kind::kNotKltGate: return "not_klt";
    case KltVerdict::Kind::kCertified: return "certified";
    case KltVerdict::Kind::kUnknown: return "unknown";
    }
    return "?";
}

std::optional<Gate> parse_gate(std::string_view id)
{
    for (Gate g : {Gate::kIndexAtLeastThreeHalvesW0, Gate::kIndexMeanOfW0W1})
        if (gate_id(g) == id)
            return g;
    return std::nullopt;
}

std::optional<CascadeRule> parse_rule(std::string_view id)
{
    for (CascadeRule r : {CascadeRule::kR1, CascadeRule::kR2, CascadeRule::kR3})
        if (rule_id(r) == id)
            return r;
    return std::nullopt;
}

std::optional<KltVerdict::Kind> parse_kind(std::string_view id)
{
    using K = KltVerdict::Kind;
    for (K k : {K::kNotKltGate, K::kCertified, K::kUnknown})
        if (kind_id(k) == id)
            return k;
    return std::nullopt;
}

std::string describe(const KltVerdict& v)
{
    std::ostringstream os;
    switch (v.kind) {
    case KltVerdict::Kind::kNotKltGate:
        os << "NotKlt (gate " << (v.gate == Gate::kIndexAtLeastThreeHalvesW0 ? "5.1" : "5.2") << ": "
           << gate_condition(v.gate) << ")";
        break;
    case KltVerdict::Kind::kCertified:
        os << "Certified (rule " << rule_id(v.rule) << ": " << v.lhs << " < " << v.rhs << ")";
        break;
    case KltVerdict::Kind::kUnknown:
        os << "Unknown";
        break;
    }
    return os.str();
}

std::optional<Gate> gate_check(const Candidate& c)
{
    const auto& w = c.weights();
    const Int two_i = 2 * c.index();
    if (two_i >= 3 * w[0])
        return Gate::kIndexAtLeastThreeHalvesW0;
    if (two_i == w[0] + w[1])
        return Gate::kIndexMeanOfW0W1;
    return std::nullopt;
}

bool line_23_free(const WeightSystem& w, Int d)
{
    return has_pair_monomial(w, d, 2, 3);
}

bool vertex_3_free(const WeightSystem& w, Int d)
{
    return d % w[3] == 0;
}

KltVerdict certify_ke(const Candidate& c)
{
    const auto& w = c.weights();
    const Int d = c.degree();
    if (!is_well_formed(w))
        throw PreconditionError("certify_ke: weights " + w.to_string() + " are not well-formed");
    if (!is_quasismooth(w, d))
        throw PreconditionError("certify_ke: general member of degree " + std::to_string(d) + " in P" +
                                w.to_string() + " is not quasi-smooth");
    if (auto g = gate_check(c))
        return KltVerdict::not_klt(*g);

    const Int lhs = 2 * c.index() * d;
    if (Int rhs = 3 * w[0] * w[1]; lhs < rhs)
        return KltVerdict::certified(CascadeRule::kR1, lhs, rhs);
    if (Int rhs = 3 * w[0] * w[2]; line_23_free(w, d) && lhs < rhs)
        return KltVerdict::certified(CascadeRule::kR2, lhs, rhs);
    if (Int rhs = 3 * w[0] * w[3]; vertex_3_free(w, d) && lhs < rhs)
        return KltVerdict::certified(CascadeRule::kR3, lhs, rhs);
    return KltVerdict::unknown();
}

std::array<Int, 3> rule_triple(const WeightSystem& w, CascadeRule r)
{
    switch (r) {
    case CascadeRule::kR1: return {1, w[0], w[1]};
    case CascadeRule::kR2: return {1, w[0], w[2]};
    case CascadeRule::kR3: return {1, w[0], w[3]};
    }
    return {1, 1, 1};
}

bool klt_local_bound(const KltLocalQuery& q)
{
    if (q.alpha <= 0 || q.alpha > 1)
        throw InvalidInput("alpha must satisfy 0 < alpha <= 1");
    if (q.ell < 1)
        throw InvalidInput("local orbifold order must be positive");
    const Rational lhs = q.alpha * q.ell * q.d * q.index;
    const Rational rhs = Rational(q.triple[0]) * q.triple[1] * q.triple[2];
    return lhs < rhs;
}

}  // namespace ldp
