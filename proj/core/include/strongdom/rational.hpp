#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "strongdom/errors.hpp"

namespace strongdom {

/// Exact rational with canonical form: reduced, denominator positive.
/// Magnitudes in this project are tiny (bound arithmetic on small graphs),
/// but comparisons go through 128-bit intermediates anyway.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: intentionally implicit
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw ValidationError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  /// "p/q" in lowest terms, e.g. "14/3", "-2/3", "4/1".
  std::string to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  /// Parses the to_string() form. Throws ParseError on anything else.
  static Rational parse(const std::string& text);
};

}  // namespace strongdom
