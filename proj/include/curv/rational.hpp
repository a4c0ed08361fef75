#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace curv {

/// Exact fraction over GMP integers; always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// "p/q" in lowest terms; integers carry an explicit "/1".
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q" or an integer "p".
Rational parse_fraction(std::string_view text);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal_string(const Rational& r, int digits);

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace curv
