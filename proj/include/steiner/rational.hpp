#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace steiner {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// Floor division that rounds toward negative infinity.
inline BigInt floor_of(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

inline BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

inline std::string to_string(const Rational& r) {
  const auto& num = boost::multiprecision::numerator(r);
  const auto& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact binomial coefficient; 0 when k is out of range.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

// Small binomial for loop bounds and table sizes; saturates at UINT64_MAX.
inline std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
  BigInt b = binomial(n, k);
  if (b > BigInt(UINT64_MAX)) return UINT64_MAX;
  return b.convert_to<std::uint64_t>();
}

}  // namespace steiner
