#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace addcomb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact conversion of a finite double to a rational. Every finite double is
/// a dyadic rational, so no rounding is involved; this is how real-valued
/// thresholds enter exact count comparisons.
inline BigRational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact_rational: non-finite value");
  if (x == 0.0) return BigRational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  BigRational r(mant);
  if (exp >= 0) {
    r *= BigRational(BigInt(1) << exp);
  } else {
    r /= BigRational(BigInt(1) << -exp);
  }
  return r;
}

inline BigInt big_pow(BigInt base, unsigned exponent) {
  BigInt result = 1;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

inline double to_double(const BigRational& r) {
  return boost::multiprecision::numerator(r).convert_to<double>() /
         boost::multiprecision::denominator(r).convert_to<double>();
}

inline std::string to_string(const BigRational& r) { return r.str(); }

}  // namespace addcomb
