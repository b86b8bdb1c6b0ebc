#pragma once

// Exact scalars: arbitrary-precision integers and rationals (GMP backed).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace matroid_id {

using Integer = mpz_class;
// Always canonical: lowest terms, positive denominator, zero is 0/1.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "a", "a/b", decimals like "0.25" and scientific forms like "1e-10".
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("bad rational: " + text); };
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw bad();
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    r.canonicalize();
    return r;
  }
  std::string mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    std::size_t used = 0;
    try {
      exponent = std::stol(text.substr(e + 1), &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != text.size() - e - 1) throw bad();
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (i < mantissa.size() && (mantissa[i] == '-' || mantissa[i] == '+')) negative = mantissa[i++] == '-';
  bool seen_point = false;
  for (; i < mantissa.size(); ++i) {
    char c = mantissa[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_point) --exponent;
    } else {
      throw bad();
    }
  }
  if (digits.empty()) throw bad();
  Rational r{Integer(digits, 10)};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) r /= scale;
  else r *= scale;
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace matroid_id
