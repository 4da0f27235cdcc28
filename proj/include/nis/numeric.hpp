#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nis {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lowest-terms "p/q" rendering; integers render without the denominator.
std::string to_fraction_string(const Rational& value);

/// Half-up rounded decimal with a fixed number of places. Display only.
std::string to_decimal_string(const Rational& value, int places = 6);

/// Parses "p/q" or "p".
Rational parse_fraction(const std::string& text);

inline BigInt pow2(unsigned exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

}  // namespace nis
