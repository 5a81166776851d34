#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "blackwell/errors.hpp"

namespace blackwell {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact embedding; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  BW_REQUIRE(std::isfinite(x), "cannot convert non-finite double to rational");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  auto mant_int = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(mant_int);
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

// Accepts "p/q", "-3/7", plain integers, and decimal strings like "0.9" or "-1.25e2".
// Base-10 integer parser. BigInt's own string constructor treats a leading
// zero as an octal prefix, which is never what a JSON-adjacent format wants.
inline BigInt parse_bigint_dec(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BW_REQUIRE(pos < text.size(), "malformed integer literal: " + text);
  BigInt value(0);
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    BW_REQUIRE(c >= '0' && c <= '9', "malformed integer literal: " + text);
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

inline Rational parse_rational(const std::string& text) {
  BW_REQUIRE(!text.empty(), "empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_bigint_dec(text.substr(0, slash));
    BigInt den = parse_bigint_dec(text.substr(slash + 1));
    BW_REQUIRE(den != 0, "zero denominator in rational literal: " + text);
    return Rational(num, den);
  }
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
      text.find('E') == std::string::npos) {
    return Rational(parse_bigint_dec(text));
  }
  // Decimal form: sign, digits, optional fraction, optional exponent.
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_digit = false;
  for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
    digits += text[pos];
    seen_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      digits += text[pos];
      ++frac_digits;
      seen_digit = true;
    }
  }
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    try {
      exponent = std::stol(text.substr(pos + 1));
    } catch (const std::exception&) {
      throw InputError("malformed decimal literal: " + text);
    }
    pos = text.size();
  }
  BW_REQUIRE(seen_digit && pos == text.size(), "malformed decimal literal: " + text);
  Rational r(digits.empty() ? BigInt(0) : parse_bigint_dec(digits));
  long net = exponent - frac_digits;
  if (net > 0) {
    BigInt p(1);
    for (long i = 0; i < net; ++i) p *= 10;
    r *= Rational(p);
  } else if (net < 0) {
    BigInt p(1);
    for (long i = 0; i < -net; ++i) p *= 10;
    r /= Rational(p);
  }
  return negative ? Rational(-r) : r;
}

// Canonical form: integers render bare, everything else as "p/q".
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline std::vector<double> to_double_vec(const RationalVector& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

}  // namespace blackwell
