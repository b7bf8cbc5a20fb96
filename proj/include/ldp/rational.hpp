#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ldp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& r);
/// Parses "p/q" or "p"; throws InvalidInput on malformed text or q = 0.
Rational parse_rational(const std::string& text);

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

}  // namespace ldp
