#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace signedspan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Smallest integer >= r.
inline BigInt ceil(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (q * den < num) ++q;
  return q;
}

inline BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace signedspan
