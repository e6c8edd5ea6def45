#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coadjoint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (q nonzero). Whitespace around the token is
/// ignored. Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" with q > 0 and the fraction reduced.
std::string to_string(const Rational& r);

/// num/den reduced, any signs. den must be nonzero.
inline Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num) / Rational(den); }

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// Integer value of r; throws InvalidInput if r is not an integer or does
/// not fit in 64 bits.
std::int64_t to_int64(const Rational& r);

/// Python-style modulus with a nonnegative result for n > 0.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace coadjoint
