#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccr/op_expr.hpp"
#include "ccr/scalar.hpp"

namespace ccr {

/// Exact polynomial in one commuting variable with ScalarCoeff coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::pair<const unsigned, ScalarCoeff>> coeffs);
  static Polynomial monomial(unsigned degree, const ScalarCoeff& c = ScalarCoeff(1));

  const std::map<unsigned, ScalarCoeff>& coefficients() const { return coeffs_; }
  ScalarCoeff coefficient(unsigned degree) const;
  /// -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first); }
  bool is_zero() const { return coeffs_.empty(); }

  void add(unsigned degree, const ScalarCoeff& c);

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const ScalarCoeff& c, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// The polynomial with its variable replaced by the generator s.
  OpExpr as_operator(Symbol s) const;

  /// Real coefficients in ascending degree after binding parameters.
  /// Throws std::domain_error if a coefficient has a nonzero imaginary part.
  std::vector<double> numeric(const ParamValues& values) const;

  std::string to_string(const std::string& variable = "x") const;

 private:
  std::map<unsigned, ScalarCoeff> coeffs_;
};

/// Realizes X as multiplication by x and P as -i d/dx on polynomials. Exact,
/// and an algebra homomorphism, so it is an independent check on normal_order.
Polynomial apply_to_polynomial(const OpExpr& e, const Polynomial& q);

/// The polynomial q with q(s) == e if e contains only powers of s (and
/// constants); nullopt otherwise.
std::optional<Polynomial> as_polynomial(const OpExpr& e, Symbol s);

/// Floating-point polynomial, coefficients in ascending degree.
struct RealPolynomial {
  std::vector<double> coeffs;

  double operator()(double x) const;
  /// -1 when every coefficient is zero.
  int degree() const;
  RealPolynomial antiderivative() const;
  RealPolynomial derivative() const;
};

}  // namespace ccr
