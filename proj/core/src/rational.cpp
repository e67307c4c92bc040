#include "erosion_lab/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace elab {

namespace {

std::int64_t checked(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t p = std::stoll(text.substr(0, slash));
    std::int64_t q = std::stoll(text.substr(slash + 1));
    return Rational(p, q);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(text), 1);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (frac_len > 17) throw std::invalid_argument("decimal literal too long: " + text);
  bool neg = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits = digits.substr(1);
  }
  if (digits.empty()) throw std::invalid_argument("bad rational literal: " + text);
  std::int64_t p = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad rational literal: " + text);
    p = checked(static_cast<__int128>(p) * 10 + (c - '0'), "rational parse overflow");
  }
  std::int64_t q = 1;
  for (std::size_t i = 0; i < frac_len; ++i)
    q = checked(static_cast<__int128>(q) * 10, "rational parse overflow");
  return Rational(neg ? -p : p, q);
}

std::string Rational::str() const {
  // Power-of-ten denominators render as plain decimals so CLI inputs like
  // 0.3333 round-trip; anything else (1/3, ...) keeps the fraction form.
  std::int64_t d = den;
  int zeros = 0;
  while (d % 10 == 0) {
    d /= 10;
    ++zeros;
  }
  if (d != 1) return std::to_string(num) + "/" + std::to_string(den);
  if (zeros == 0) return std::to_string(num);
  bool neg = num < 0;
  std::string digits = std::to_string(neg ? -num : num);
  if (static_cast<int>(digits.size()) <= zeros)
    digits.insert(0, zeros + 1 - digits.size(), '0');
  digits.insert(digits.size() - zeros, ".");
  return (neg ? "-" : "") + digits;
}

std::int64_t Rational::floor_mul(std::int64_t m) const {
  __int128 prod = static_cast<__int128>(num) * m;
  __int128 q = prod / den;
  if (prod % den != 0 && prod < 0) --q;
  return checked(q, "floor_mul overflow");
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  __int128 a = n < 0 ? -n : n, b = d, t = 0;
  while (b != 0) {
    t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Rational(checked(n / a, "rational overflow"), checked(d / a, "rational overflow"));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
  Rational a(num, o.den), b(o.num, den);  // cross-reduce first
  return Rational(checked(static_cast<__int128>(a.num) * b.num, "rational overflow"),
                  checked(static_cast<__int128>(a.den) * b.den, "rational overflow"));
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

bool Rational::operator<=(const Rational& o) const {
  return static_cast<__int128>(num) * o.den <= static_cast<__int128>(o.num) * den;
}

int compare_ratio(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b) {
  if (q <= 0 || b <= 0) throw std::invalid_argument("compare_ratio needs positive denominators");
  __int128 lhs = static_cast<__int128>(p) * b;
  __int128 rhs = static_cast<__int128>(a) * q;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace elab
