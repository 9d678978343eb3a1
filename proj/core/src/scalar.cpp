#include "ccr/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace ccr {

ParamMonomial ParamMonomial::of(std::string name, int power) {
  ParamMonomial m;
  if (power != 0) m.powers_.emplace(std::move(name), power);
  return m;
}

ParamMonomial operator*(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out = a;
  for (const auto& [name, power] : b.powers_) {
    auto [it, inserted] = out.powers_.try_emplace(name, power);
    if (!inserted) {
      it->second += power;
      if (it->second == 0) out.powers_.erase(it);
    }
  }
  return out;
}

double ParamMonomial::evaluate(const ParamValues& values) const {
  double out = 1.0;
  for (const auto& [name, power] : powers_) {
    auto it = values.find(name);
    if (it == values.end()) throw std::invalid_argument("no value bound to parameter '" + name + "'");
    out *= std::pow(it->second, power);
  }
  return out;
}

std::string ParamMonomial::to_string() const {
  std::string out;
  for (const auto& [name, power] : powers_) {
    if (!out.empty()) out += '*';
    out += name;
    if (power != 1) out += '^' + std::to_string(power);
  }
  return out;
}

ScalarCoeff::ScalarCoeff(long value) : ScalarCoeff(Rational(value)) {}

ScalarCoeff::ScalarCoeff(const Rational& re, const Rational& im) {
  add_term({}, ComplexRational{re, im});
}

ScalarCoeff::ScalarCoeff(const ComplexRational& c, const ParamMonomial& params) { add_term(params, c); }

ScalarCoeff ScalarCoeff::i() { return ScalarCoeff(Rational(0), Rational(1)); }

ScalarCoeff ScalarCoeff::param(std::string name, int power) {
  return ScalarCoeff(ComplexRational{1, 0}, ParamMonomial::of(std::move(name), power));
}

bool ScalarCoeff::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

ComplexRational ScalarCoeff::constant_part() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? ComplexRational{} : it->second;
}

void ScalarCoeff::add_term(const ParamMonomial& m, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarCoeff& ScalarCoeff::operator+=(const ScalarCoeff& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ScalarCoeff& ScalarCoeff::operator-=(const ScalarCoeff& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ScalarCoeff operator*(const ScalarCoeff& a, const ScalarCoeff& b) {
  ScalarCoeff out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ScalarCoeff& ScalarCoeff::operator*=(const ScalarCoeff& o) { return *this = *this * o; }

ScalarCoeff& ScalarCoeff::operator/=(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("division of a scalar by zero");
  for (auto& [m, c] : terms_) {
    c.re /= q;
    c.im /= q;
  }
  return *this;
}

ScalarCoeff operator-(const ScalarCoeff& a) {
  ScalarCoeff out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::complex<double> ScalarCoeff::evaluate(const ParamValues& values) const {
  std::complex<double> out{0.0, 0.0};
  for (const auto& [m, c] : terms_) out += std::complex<double>(c.re.get_d(), c.im.get_d()) * m.evaluate(values);
  return out;
}

std::string ScalarCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    auto piece = text::monomial(c, m);
    if (first)
      out += piece.negative ? "-" : "";
    else
      out += piece.negative ? " - " : " + ";
    out += piece.factors.empty() ? "1" : piece.factors;
    first = false;
  }
  return out;
}

namespace text {

std::string rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

SignedFactors monomial(const ComplexRational& c, const ParamMonomial& params) {
  SignedFactors out;
  std::string number;
  if (c.is_real()) {
    out.negative = sgn(c.re) < 0;
    Rational mag = abs(c.re);
    if (mag != 1) number = mag.get_den() == 1 ? rational(mag) : "(" + rational(mag) + ")";
  } else {
    out.negative = sgn(c.re) < 0 || (sgn(c.re) == 0 && sgn(c.im) < 0);
    ComplexRational v = out.negative ? -c : c;
    number = "(" + rational(v.re) + "," + rational(v.im) + ")";
  }
  std::string p = params.to_string();
  out.factors = number;
  if (!p.empty()) out.factors += (out.factors.empty() ? "" : "*") + p;
  return out;
}

}  // namespace text

}  // namespace ccr
