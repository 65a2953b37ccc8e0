#pragma once

// Arbitrary-precision rationals. GMP's mpq_class keeps every arithmetic
// result canonical (lowest terms, positive denominator, zero as 0/1).

#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "cyclogab/error.hpp"

namespace cyclogab {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational inverse(const Rational& q) {
  if (is_zero(q)) throw DomainError("inverse of zero rational");
  return 1 / q;
}

/// Formats as "num/den" in lowest terms; integers keep the "/1".
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "num/den" or a bare integer. The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      num = Integer(s, 10);
    } else {
      num = Integer(s.substr(0, slash), 10);
      den = Integer(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
  if (sgn(den) == 0) throw DomainError("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exact value of a decimal literal such as "0.01", "-2.5e-3" or "7".
inline Rational parse_decimal(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw DomainError("malformed decimal literal '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw DomainError("malformed decimal literal '" + s + "'");
    long e = 0;
    const char* first = s.data() + pos + 1;
    if (first < s.data() + s.size() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), e);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw DomainError("malformed decimal exponent in '" + s + "'");
    }
    exponent += e;
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  q.canonicalize();
  return q;
}

/// Exact rational equal to the shortest decimal that round-trips `value`.
inline Rational decimal_value(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw DomainError("cannot format floating-point value");
  return parse_decimal(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

/// Smallest integer >= q.
inline Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace cyclogab
