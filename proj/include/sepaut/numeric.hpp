#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace sepaut {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<BigInt>;

inline std::string to_string(BigInt const& value) { return value.str(); }

// "p/q", or "p" when the denominator is one.
inline std::string to_string(Rational const& value) {
  auto const den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

// Least non-negative residue.
inline BigInt mod_floor(BigInt const& value, BigInt const& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

}  // namespace sepaut
