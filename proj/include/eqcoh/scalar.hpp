#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace eqcoh {

using Int = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; cpp_rational maintains both.
using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational a + b*I with I^2 = -1; the coefficient field of the
/// whole engine.  No floating point anywhere.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Scalar(int v) : re(v) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  /// re^2 + im^2, zero iff the scalar is zero.
  Rational norm() const { return re * re + im * im; }

  Scalar inv() const {
    if (is_zero()) throw std::domain_error("Scalar: inversion of zero");
    Rational n = norm();
    return Scalar(re / n, -im / n);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.re + b.re, a.im + b.im);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.re - b.re, a.im - b.im);
  }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inv();
  }
  Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
  Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// Bit-exact textual form "a/b+c/d*I"; zero parts omitted, "0" for zero.
std::string to_string(const Rational& r);
std::string to_string(const Scalar& s);

/// Parses the textual forms produced by to_string (also accepts "I", "-I",
/// leading signs, and whitespace-free rational literals).
Rational parse_rational(const std::string& text);
Scalar parse_scalar(const std::string& text);

}  // namespace eqcoh
