#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ccr/op_expr.hpp"
#include "ccr/polynomial.hpp"

namespace ccr {

/// F(X) = dP/dt as a polynomial in X.
struct ForceLaw {
  Polynomial force;
  std::string label;
};

/// V(P) = dX/dt as a polynomial in P.
struct VelocityLaw {
  Polynomial velocity;
};

/// G = \int V dP - \int F dX with zero integration constants.
struct Generator {
  OpExpr expr;
};

/// Truncated operator Taylor series sum_k coeffs[k] t^k / k!.
struct OperatorTimeSeries {
  std::vector<OpExpr> coeffs;

  unsigned order() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
  /// One "k: <expr>" line per coefficient.
  std::string to_string() const;
};

/// X(t) = alpha(t) X0 + beta(t) P0 + gamma(t) 1, each scalar series stored as
/// t^k/k! coefficients.
struct AffineFlow {
  std::vector<ScalarCoeff> alpha;
  std::vector<ScalarCoeff> beta;
  std::vector<ScalarCoeff> gamma;

  OperatorTimeSeries reassemble() const;
};

/// Thrown by extract_affine when a coefficient leaves span{X, P, 1}.
class NonAffineFlow : public std::domain_error {
 public:
  NonAffineFlow(unsigned order, const std::string& coefficient);
  unsigned order() const { return order_; }

 private:
  unsigned order_;
};

inline constexpr unsigned kDefaultTaylorOrder = 16;

/// P/m
VelocityLaw newtonian_velocity();
ForceLaw free_force();
/// -m omega^2 X
ForceLaw harmonic_force();
/// F0
ForceLaw constant_force();

Generator generator(const ForceLaw& force, const VelocityLaw& velocity);

/// dO/dt = i[G, O], normal-ordered.
OpExpr time_derivative(const OpExpr& o, const Generator& g);

/// Iterates c_{k+1} = i[G, c_k] from c_0 = normal_order(o0).
OperatorTimeSeries taylor_flow(const OpExpr& o0, const Generator& g, unsigned order = kDefaultTaylorOrder);

AffineFlow extract_affine(const OperatorTimeSeries& series);

/// Coefficients of [A(t), B(t)] truncated at the shorter order:
/// c_n = sum_k binom(n,k) [a_k, b_{n-k}].
OperatorTimeSeries series_commutator(const OperatorTimeSeries& a, const OperatorTimeSeries& b);

/// Five routes to d/dt X^n under the free generator P^2/2m:
///   chain_rule     (1/m) sum_{j=0}^{n-1} X^j P X^{n-1-j}
///   p_left         (1/m)(-i P [X^n,P] + S)    all P moved left
///   p_right        (1/m)(-i [X^n,P] P - S)    all P moved right
///   averaged       (-i/2m)(P [X^n,P] + [X^n,P] P)
///   heisenberg     i [P^2/2m, X^n]
/// with S = sum_{j=1}^{n-1} [X^j, P X^{n-1-j}]. None is normal-ordered except
/// heisenberg; compare with equals().
struct PowerDerivativeForms {
  OpExpr chain_rule;
  OpExpr p_left;
  OpExpr p_right;
  OpExpr averaged;
  OpExpr heisenberg;
};
PowerDerivativeForms free_power_derivative_forms(unsigned n);

/// The t^k/k! coefficients of sin(omega t)/(m omega^power_of_omega), for
/// comparing against alternative forms of the harmonic solution.
std::vector<ScalarCoeff> harmonic_sine_series(unsigned order, int power_of_omega);
/// t^k/k! coefficients of cos(omega t).
std::vector<ScalarCoeff> harmonic_cosine_series(unsigned order);

}  // namespace ccr
