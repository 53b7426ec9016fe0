#pragma once

#include <gmpxx.h>

#include <string>

namespace fano3lab {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "a" or "a/b" in base 10; throws Error("ParseError") on malformed input
// or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace fano3lab
