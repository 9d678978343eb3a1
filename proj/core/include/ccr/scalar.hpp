#pragma once

#include <complex>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ccr {

using Rational = mpq_class;

/// Numeric values bound to parameter names when a symbolic coefficient is
/// evaluated in floating point.
using ParamValues = std::map<std::string, double, std::less<>>;

/// Exact Gaussian rational re + i*im.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Product of named real parameters raised to integer powers, e.g. m^-1*omega^2.
/// Zero exponents are never stored, so the empty monomial is the number 1.
class ParamMonomial {
 public:
  ParamMonomial() = default;
  static ParamMonomial of(std::string name, int power = 1);

  const std::map<std::string, int>& powers() const { return powers_; }
  bool empty() const { return powers_.empty(); }

  friend ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b);
  friend auto operator<=>(const ParamMonomial&, const ParamMonomial&) = default;
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  double evaluate(const ParamValues& values) const;
  std::string to_string() const;

 private:
  std::map<std::string, int> powers_;
};

/// Exact scalar of the operator algebra: a finite sum of complex-rational
/// multiples of parameter monomials. The zero scalar has no terms.
class ScalarCoeff {
 public:
  ScalarCoeff() = default;
  ScalarCoeff(long value);  // NOLINT(google-explicit-constructor)
  ScalarCoeff(const Rational& re, const Rational& im = 0);
  ScalarCoeff(const ComplexRational& c, const ParamMonomial& params = {});

  static ScalarCoeff i();
  static ScalarCoeff param(std::string name, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  /// True when the value carries no parameters.
  bool is_constant() const;
  /// Exact value of the parameter-free part.
  ComplexRational constant_part() const;

  const std::map<ParamMonomial, ComplexRational>& terms() const { return terms_; }

  ScalarCoeff& operator+=(const ScalarCoeff& o);
  ScalarCoeff& operator-=(const ScalarCoeff& o);
  ScalarCoeff& operator*=(const ScalarCoeff& o);
  ScalarCoeff& operator/=(const Rational& q);

  friend ScalarCoeff operator+(ScalarCoeff a, const ScalarCoeff& b) { return a += b; }
  friend ScalarCoeff operator-(ScalarCoeff a, const ScalarCoeff& b) { return a -= b; }
  friend ScalarCoeff operator*(const ScalarCoeff& a, const ScalarCoeff& b);
  friend ScalarCoeff operator/(ScalarCoeff a, const Rational& q) { return a /= q; }
  friend ScalarCoeff operator-(const ScalarCoeff& a);
  friend bool operator==(const ScalarCoeff&, const ScalarCoeff&) = default;

  std::complex<double> evaluate(const ParamValues& values) const;

  /// Canonical text; parses back to the same value.
  std::string to_string() const;

 private:
  void add_term(const ParamMonomial& m, const ComplexRational& c);

  std::map<ParamMonomial, ComplexRational> terms_;
};

namespace text {

/// Integer or "a/b".
std::string rational(const Rational& q);

/// Rendering of one complex-rational times a parameter monomial, with the
/// overall sign split off so the caller can join terms with " + " / " - ".
struct SignedFactors {
  bool negative = false;
  std::string factors;  // '*'-joined, empty when the magnitude is exactly 1
};
SignedFactors monomial(const ComplexRational& c, const ParamMonomial& params);

}  // namespace text

}  // namespace ccr
