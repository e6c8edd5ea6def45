#include "coadjoint/rational.hpp"

#include <cctype>
#include <limits>

#include "coadjoint/errors.hpp"

namespace coadjoint {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InvalidInput("empty rational");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
  const BigInt num = parse_integer(trim(s.substr(0, slash)), s);
  const BigInt den = parse_integer(trim(s.substr(slash + 1)), s);
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(s) + "'");
  return ratio(num, den);
}

std::string to_string(const Rational& r) {
  const BigInt& den = boost::multiprecision::denominator(r);
  std::string out = boost::multiprecision::numerator(r).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw InvalidInput("non-integral value " + to_string(r));
  const BigInt& n = boost::multiprecision::numerator(r);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw InvalidInput("integer " + n.str() + " out of 64-bit range");
  return static_cast<std::int64_t>(n);
}

}  // namespace coadjoint
