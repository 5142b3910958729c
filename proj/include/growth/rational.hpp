#pragma once

#include <gmpxx.h>

#include <string>

namespace growth {

// All algebra in this library is exact.  Rational is the only coefficient
// type; BigInt carries hook-length products and other counts that overflow
// machine words long before n reaches the sizes we care about.
using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline std::string to_string(const BigInt& z) {
    return z.get_str();
}

// Parses "p" or "p/q" with optional sign.  Throws std::invalid_argument on
// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// factorial(n) as an exact integer.
BigInt factorial(unsigned n);

}  // namespace growth
