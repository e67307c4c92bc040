#pragma once

#include <cstdint>
#include <string>

namespace elab {

/// Exact rational with 64-bit terms, always normalized with den > 0.
///
/// The blue-fraction alpha and the band width epsilon are kept rational so
/// that counts like floor(alpha*n(n+1)) and strict band tests like
/// y < alpha - epsilon are exact. A double alpha of 1/3 rounds down and
/// yields floor(alpha*930) = 309 instead of 310 on the 30-cylinder.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  /// Accepts "p/q", integers, and decimal strings ("0.33" -> 33/100).
  static Rational parse(const std::string& text);

  /// Decimal form when the denominator is a power of ten, else "p/q".
  std::string str() const;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  /// floor(*this * m) computed in integer arithmetic.
  std::int64_t floor_mul(std::int64_t m) const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }
};

/// Compares p/q against the integer ratio a/b without overflow.
int compare_ratio(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b);

}  // namespace elab
