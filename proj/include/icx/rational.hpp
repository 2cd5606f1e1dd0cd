#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace icx {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer and Rational a canonical fraction (positive denominator, reduced).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Largest integer <= r.
Int floor_of(const Rational& r);
// Smallest integer >= r.
Int ceil_of(const Rational& r);

Rational abs_of(const Rational& r);

// Parses "p/q" or "p" with optional sign; q must be nonzero.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Renders as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);
std::string int_to_string(const Int& n);

Int parse_int(const std::string& s);

// Convenience for literals in tests and tables.
inline Rational rat(long long num, long long den = 1) {
  return Rational(Int(num), Int(den));
}

}  // namespace icx
