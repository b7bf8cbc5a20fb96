#include "ldp/topology.hpp"

#include "ldp/quasismooth.hpp"

#include <sstream>

namespace ldp {

VirtualCharacter VirtualCharacter::lambda(Order n, const Rational& coeff)
{
    if (n < 1)
        throw InvalidInput("Lambda order must be positive");
    VirtualCharacter c;
    c.add_term(n, coeff);
    return c;
}

void VirtualCharacter::add_term(Order n, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

Rational VirtualCharacter::coefficient(Order n) const
{
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational VirtualCharacter::degree() const
{
    Rational s = 0;
    for (const auto& [n, c] : coeffs_)
        s += c * n;
    return s;
}

Rational VirtualCharacter::mass() const
{
    Rational s = 0;
    for (const auto& [n, c] : coeffs_)
        s += c;
    return s;
}

bool VirtualCharacter::is_integral() const
{
    for (const auto& [n, c] : coeffs_)
        if (!ldp::is_integral(c))
            return false;
    return true;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o)
{
    for (const auto& [n, c] : o.coeffs_)
        add_term(n, c);
    return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o)
{
    for (const auto& [n, c] : o.coeffs_)
        add_term(n, -c);
    return *this;
}

VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b)
{
    VirtualCharacter out;
    for (const auto& [n, c] : a.coeffs_)
        for (const auto& [m, e] : b.coeffs_)
            out.add_term(lcm(n, m), c * e * gcd(n, m));
    return out;
}

std::string VirtualCharacter::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : coeffs_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (n == 1) {
            os << ldp::to_string(mag);
            continue;
        }
        if (mag != 1) {
            if (ldp::is_integral(mag))
                os << ldp::to_string(mag);
            else
                os << '(' << ldp::to_string(mag) << ')';
        }
        os << "Λ" << n;
    }
    return os.str();
}

ReducedRatio reduced_ratio(Int d, Int w)
{
    if (d < 1 || w < 1)
        throw InvalidInput("reduced_ratio needs positive arguments");
    const Int g = gcd(d, w);
    return {d / g, w / g};
}

Int milnor_number(const Candidate& c)
{
    Rational mu = 1;
    for (Int w : c.weights().values())
        mu *= Rational(c.degree() - w, w);
    if (!is_integral(mu))
        throw InvariantViolation("Milnor number " + to_string(mu) + " is not integral for " + c.weights().to_string());
    return static_cast<Int>(numerator(mu));
}

VirtualCharacter characteristic_divisor(const Candidate& c)
{
    VirtualCharacter div = VirtualCharacter::unit();
    for (Int w : c.weights().values()) {
        const auto [u, v] = reduced_ratio(c.degree(), w);
        div = div * (VirtualCharacter::lambda(u, Rational(1, v)) - VirtualCharacter::unit());
    }
    if (!div.is_integral())
        throw InvariantViolation("characteristic divisor " + div.to_string() + " has non-integral coefficients");
    if (div.coefficient(1) != 1)
        throw InvariantViolation("characteristic divisor " + div.to_string() + " has unit coefficient != 1");
    return div;
}

Int second_betti_link(const Candidate& c)
{
    return static_cast<Int>(numerator(characteristic_divisor(c).mass()));
}

LinkReport diffeo_type(const Candidate& c)
{
    if (!is_well_formed(c.weights()))
        throw PreconditionError("diffeo_type: weights " + c.weights().to_string() +
                                " are not well-formed; torsion-freeness of H2 is not guaranteed");
    if (!is_quasismooth(c.weights(), c.degree()))
        throw PreconditionError("diffeo_type: the link of degree " + std::to_string(c.degree()) + " in P" +
                                c.weights().to_string() + " is not smooth (not quasi-smooth)");
    LinkReport r;
    r.mu = milnor_number(c);
    r.divisor = characteristic_divisor(c);
    r.b2_link = static_cast<Int>(numerator(r.divisor.mass()));
    r.l = r.b2_link;
    if (r.divisor.degree() != r.mu)
        throw InvariantViolation("divisor degree " + to_string(r.divisor.degree()) + " differs from Milnor number " +
                                 std::to_string(r.mu));
    return r;
}

Int orbifold_b2(const Candidate& c)
{
    return diffeo_type(c).b2_link + 1;
}

std::string link_type_string(Int l)
{
    if (l == 0)
        return "S^5";
    if (l == 1)
        return "S²×S³";
    return "#" + std::to_string(l) + "(S²×S³)";
}

}  // namespace ldp
