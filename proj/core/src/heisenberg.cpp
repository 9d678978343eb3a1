#include "ccr/heisenberg.hpp"

namespace ccr {

std::string OperatorTimeSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += std::to_string(k) + ": " + coeffs[k].to_string() + "\n";
  return out;
}

OperatorTimeSeries AffineFlow::reassemble() const {
  OperatorTimeSeries s;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    OpExpr c = alpha[k] * OpExpr::x();
    c += beta[k] * OpExpr::p();
    c += OpExpr(gamma[k]);
    s.coeffs.push_back(std::move(c));
  }
  return s;
}

NonAffineFlow::NonAffineFlow(unsigned order, const std::string& coefficient)
    : std::domain_error("flow is not affine: coefficient " + std::to_string(order) + " is " + coefficient),
      order_(order) {}

VelocityLaw newtonian_velocity() { return {Polynomial::monomial(1, ScalarCoeff::param("m", -1))}; }

ForceLaw free_force() { return {Polynomial{}, "free"}; }

ForceLaw harmonic_force() {
  return {Polynomial::monomial(1, -(ScalarCoeff::param("m") * ScalarCoeff::param("omega", 2))), "harmonic"};
}

ForceLaw constant_force() { return {Polynomial::monomial(0, ScalarCoeff::param("F0")), "linear"}; }

Generator generator(const ForceLaw& force, const VelocityLaw& velocity) {
  OpExpr g = velocity.velocity.antiderivative().as_operator(Symbol::P);
  g -= force.force.antiderivative().as_operator(Symbol::X);
  return {std::move(g)};
}

OpExpr time_derivative(const OpExpr& o, const Generator& g) { return ScalarCoeff::i() * commutator(g.expr, o); }

OperatorTimeSeries taylor_flow(const OpExpr& o0, const Generator& g, unsigned order) {
  OperatorTimeSeries s;
  s.coeffs.reserve(order + 1);
  s.coeffs.push_back(normal_order(o0));
  for (unsigned k = 0; k < order; ++k) s.coeffs.push_back(time_derivative(s.coeffs.back(), g));
  return s;
}

AffineFlow extract_affine(const OperatorTimeSeries& series) {
  AffineFlow flow;
  const Word x{Symbol::X};
  const Word p{Symbol::P};
  for (std::size_t k = 0; k < series.coeffs.size(); ++k) {
    const OpExpr c = normal_order(series.coeffs[k]);
    if (c.max_word_length() >= 2) throw NonAffineFlow(static_cast<unsigned>(k), c.to_string());
    flow.alpha.push_back(c.coefficient(x));
    flow.beta.push_back(c.coefficient(p));
    flow.gamma.push_back(c.coefficient(Word{}));
  }
  return flow;
}

OperatorTimeSeries series_commutator(const OperatorTimeSeries& a, const OperatorTimeSeries& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  OperatorTimeSeries out;
  for (std::size_t order = 0; order < n; ++order) {
    OpExpr c;
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= order; ++k) {
      c += ScalarCoeff(Rational(binom)) * commutator(a.coeffs[k], b.coeffs[order - k]);
      binom = binom * static_cast<unsigned long>(order - k) / static_cast<unsigned long>(k + 1);
    }
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

PowerDerivativeForms free_power_derivative_forms(unsigned n) {
  const OpExpr x = OpExpr::x();
  const OpExpr p = OpExpr::p();
  const ScalarCoeff inv_m = ScalarCoeff::param("m", -1);
  const ScalarCoeff minus_i(Rational(0), Rational(-1));

  PowerDerivativeForms f;
  for (unsigned j = 0; j < n; ++j) f.chain_rule += multiply(multiply(power(x, j), p), power(x, n - 1 - j));
  f.chain_rule *= inv_m;

  OpExpr s;
  for (unsigned j = 1; j < n; ++j) s += commutator(power(x, j), multiply(p, power(x, n - 1 - j)));
  const OpExpr c = commutator(power(x, n), p);

  f.p_left = inv_m * (minus_i * multiply(p, c) + s);
  f.p_right = inv_m * (minus_i * multiply(c, p) - s);
  f.averaged = (minus_i * inv_m / Rational(2)) * (multiply(p, c) + multiply(c, p));
  f.heisenberg = time_derivative(power(x, n), generator(free_force(), newtonian_velocity()));
  return f;
}

std::vector<ScalarCoeff> harmonic_sine_series(unsigned order, int power_of_omega) {
  // d^k/dt^k sin(wt) at 0 is 0 for even k and (-1)^((k-1)/2) w^k for odd k.
  std::vector<ScalarCoeff> out;
  for (unsigned k = 0; k <= order; ++k) {
    if (k % 2 == 0) {
      out.emplace_back();
      continue;
    }
    long sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
    out.push_back(ScalarCoeff(sign) * ScalarCoeff::param("omega", static_cast<int>(k) - power_of_omega) *
                  ScalarCoeff::param("m", -1));
  }
  return out;
}

std::vector<ScalarCoeff> harmonic_cosine_series(unsigned order) {
  std::vector<ScalarCoeff> out;
  for (unsigned k = 0; k <= order; ++k) {
    if (k % 2 == 1) {
      out.emplace_back();
      continue;
    }
    long sign = (k / 2) % 2 == 0 ? 1 : -1;
    out.push_back(ScalarCoeff(sign) * ScalarCoeff::param("omega", static_cast<int>(k)));
  }
  return out;
}

}  // namespace ccr
