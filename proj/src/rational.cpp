#include "ldp/rational.hpp"

#include "ldp/core.hpp"

#include <sstream>

namespace ldp {

std::string to_string(const Rational& r)
{
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << '/' << denominator(r);
    return os.str();
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos)
            throw InvalidInput("malformed rational: '" + text + "'");
        return BigInt(s);
    };
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    const BigInt p = parse_int(text.substr(0, slash));
    const BigInt q = parse_int(text.substr(slash + 1));
    if (q == 0)
        throw InvalidInput("zero denominator: '" + text + "'");
    return Rational(p, q);
}

}  // namespace ldp
