#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace rap {

// Exact rational p/q, always normalized (q > 0, gcd(|p|, q) = 1).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

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
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Recovers a rational p/q from a floating value via continued-fraction
// convergents with denominator bound 10^6. A convergent is accepted only if
// it is within `tol` AND unusually sharp for its denominator
// (|x - p/q| <= sharpness/q^2), so generic irrationals such as sqrt(2) are
// rejected even when some large convergent happens to land inside `tol`.
std::optional<Rational> rational_detect(double x, double tol = 1e-9,
                                        long long max_den = 1000000,
                                        double sharpness = 1e-4);

// Distance from x to the nearest integer.
double integer_distance(double x);

}  // namespace rap
