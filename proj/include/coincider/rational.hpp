#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>

namespace coincider {

// Arbitrary-precision rational, always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Parses "a/b", "a", "-a/b", or a decimal like "1.25" into an exact rational.
Rational parse_rational(const std::string& text);

// Uniform numerator in [-max_num, max_num], denominator in [1, max_den].
// Small bounds make repeated values (and hence coincidences) likely.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t max_num,
                                std::int64_t max_den) {
  const std::int64_t num =
      static_cast<std::int64_t>(rng() % (2 * max_num + 1)) - max_num;
  const std::int64_t den = static_cast<std::int64_t>(rng() % max_den) + 1;
  return make_rational(num, den);
}

}  // namespace coincider
