#include "ccr/polynomial.hpp"

#include <stdexcept>

namespace ccr {

Polynomial::Polynomial(std::initializer_list<std::pair<const unsigned, ScalarCoeff>> coeffs) {
  for (const auto& [d, c] : coeffs) add(d, c);
}

Polynomial Polynomial::monomial(unsigned degree, const ScalarCoeff& c) {
  Polynomial q;
  q.add(degree, c);
  return q;
}

ScalarCoeff Polynomial::coefficient(unsigned degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? ScalarCoeff{} : it->second;
}

void Polynomial::add(unsigned degree, const ScalarCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Polynomial Polynomial::derivative() const {
  Polynomial out;
  for (const auto& [d, c] : coeffs_)
    if (d > 0) out.add(d - 1, c * ScalarCoeff(static_cast<long>(d)));
  return out;
}

Polynomial Polynomial::antiderivative() const {
  Polynomial out;
  for (const auto& [d, c] : coeffs_) out.add(d + 1, c / Rational(d + 1));
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [d, c] : o.coeffs_) add(d, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [d, c] : o.coeffs_) add(d, -c);
  return *this;
}

Polynomial operator*(const ScalarCoeff& c, const Polynomial& q) {
  Polynomial out;
  for (const auto& [d, v] : q.coeffs_) out.add(d, c * v);
  return out;
}

OpExpr Polynomial::as_operator(Symbol s) const {
  OpExpr out;
  for (const auto& [d, c] : coeffs_) out.add_term(Word(std::vector<Symbol>(d, s)), c);
  return out;
}

std::vector<double> Polynomial::numeric(const ParamValues& values) const {
  std::vector<double> out(degree() < 0 ? 0 : static_cast<std::size_t>(degree()) + 1, 0.0);
  for (const auto& [d, c] : coeffs_) {
    auto v = c.evaluate(values);
    if (v.imag() != 0.0) throw std::domain_error("polynomial has a complex coefficient at degree " + std::to_string(d));
    out[d] = v.real();
  }
  return out;
}

std::string Polynomial::to_string(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, c] = *it;
    bool negative = false;
    std::string factors;
    if (c.terms().size() == 1) {
      auto piece = text::monomial(c.terms().begin()->second, c.terms().begin()->first);
      negative = piece.negative;
      factors = piece.factors;
    } else {
      factors = "(" + c.to_string() + ")";
    }
    std::string power = d == 0 ? "" : d == 1 ? variable : variable + "^" + std::to_string(d);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (power.empty())
      out += factors.empty() ? "1" : factors;
    else
      out += factors.empty() ? power : factors + "*" + power;
    first = false;
  }
  return out;
}

Polynomial apply_to_polynomial(const OpExpr& e, const Polynomial& q) {
  const ScalarCoeff minus_i(Rational(0), Rational(-1));
  Polynomial out;
  for (const auto& [w, c] : e.terms()) {
    Polynomial v = q;
    const auto& s = w.symbols();
    for (auto it = s.rbegin(); it != s.rend() && !v.is_zero(); ++it) {
      if (*it == Symbol::P) {
        v = minus_i * v.derivative();
      } else {
        Polynomial shifted;
        for (const auto& [d, k] : v.coefficients()) shifted.add(d + 1, k);
        v = std::move(shifted);
      }
    }
    out += c * v;
  }
  return out;
}

std::optional<Polynomial> as_polynomial(const OpExpr& e, Symbol s) {
  Polynomial out;
  for (const auto& [w, c] : e.terms()) {
    if (w.count(s) != w.size()) return std::nullopt;
    out.add(static_cast<unsigned>(w.size()), c);
  }
  return out;
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int RealPolynomial::degree() const {
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d)
    if (coeffs[static_cast<std::size_t>(d)] != 0.0) return d;
  return -1;
}

RealPolynomial RealPolynomial::antiderivative() const {
  RealPolynomial out;
  out.coeffs.assign(coeffs.size() + 1, 0.0);
  for (std::size_t d = 0; d < coeffs.size(); ++d) out.coeffs[d + 1] = coeffs[d] / static_cast<double>(d + 1);
  return out;
}

RealPolynomial RealPolynomial::derivative() const {
  RealPolynomial out;
  for (std::size_t d = 1; d < coeffs.size(); ++d) out.coeffs.push_back(coeffs[d] * static_cast<double>(d));
  return out;
}

}  // namespace ccr
