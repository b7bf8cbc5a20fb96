#pragma once

#include "ldp/core.hpp"
#include "ldp/rational.hpp"

#include <map>
#include <string>

namespace ldp {

/// Element of Z[C*] (with rational coefficients mid-computation) in the basis
/// Lambda_n = div(t^n - 1). Lambda_1 is the unit. Zero coefficients are never
/// stored.
class VirtualCharacter {
public:
    using Order = Int;

    VirtualCharacter() = default;

    static VirtualCharacter unit() { return lambda(1); }
    static VirtualCharacter lambda(Order n, const Rational& coeff = 1);

    const std::map<Order, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(Order n) const;
    bool empty() const { return coeffs_.empty(); }

    /// Sum of n * a_n.
    Rational degree() const;
    /// Sum of a_n.
    Rational mass() const;
    bool is_integral() const;

    VirtualCharacter& operator+=(const VirtualCharacter& o);
    VirtualCharacter& operator-=(const VirtualCharacter& o);
    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
    friend VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b);

    bool operator==(const VirtualCharacter&) const = default;

    /// "1 + 2Λ4 - Λ6 + 5Λ12"; "0" when empty.
    std::string to_string() const;

private:
    void add_term(Order n, const Rational& c);
    std::map<Order, Rational> coeffs_;
};

/// Lambda_a * Lambda_b = gcd(a,b) Lambda_lcm(a,b), extended bilinearly.
inline VirtualCharacter char_mul(const VirtualCharacter& a, const VirtualCharacter& b) { return a * b; }

/// d / w in lowest terms u / v.
struct ReducedRatio {
    Int u;
    Int v;
    bool operator==(const ReducedRatio&) const = default;
};

ReducedRatio reduced_ratio(Int d, Int w);

/// Product over i of (d / w_i - 1). Throws InvariantViolation if not integral.
Int milnor_number(const Candidate& c);

/// Product over i of (Lambda_{u_i} / v_i - 1). Throws InvariantViolation
/// unless the result is integral with unit coefficient 1.
VirtualCharacter characteristic_divisor(const Candidate& c);

/// Second Betti number of the link: total coefficient sum of the divisor.
Int second_betti_link(const Candidate& c);

struct LinkReport {
    Int mu = 0;
    VirtualCharacter divisor;
    Int b2_link = 0;
    /// The link is diffeomorphic to S^5 # l (S^2 x S^3).
    Int l = 0;
};

/// Throws PreconditionError unless the weights are well-formed and the
/// general member is quasi-smooth.
LinkReport diffeo_type(const Candidate& c);

/// Second Betti number of the orbifold Z_w: link b2 + 1 (the convention of
/// the b2 column in the classification tables).
Int orbifold_b2(const Candidate& c);

/// "S^5" for l = 0, "S²×S³" for l = 1, "#l(S²×S³)" otherwise.
std::string link_type_string(Int l);

}  // namespace ldp
