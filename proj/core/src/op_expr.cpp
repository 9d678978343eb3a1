#include "ccr/op_expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ccr {

Word Word::ordered(unsigned x_power, unsigned p_power) {
  std::vector<Symbol> s(x_power, Symbol::X);
  s.insert(s.end(), p_power, Symbol::P);
  return Word(std::move(s));
}

bool Word::is_normal_ordered() const {
  return std::is_sorted(symbols_.begin(), symbols_.end());
}

unsigned Word::count(Symbol s) const {
  return static_cast<unsigned>(std::count(symbols_.begin(), symbols_.end(), s));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Symbol> s = a.symbols_;
  s.insert(s.end(), b.symbols_.begin(), b.symbols_.end());
  return Word(std::move(s));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.symbols_ <=> b.symbols_;
}

std::string Word::to_string() const {
  if (symbols_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < symbols_.size();) {
    std::size_t j = i;
    while (j < symbols_.size() && symbols_[j] == symbols_[i]) ++j;
    if (!out.empty()) out += '*';
    out += symbols_[i] == Symbol::X ? 'X' : 'P';
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

OpExpr::OpExpr(const ScalarCoeff& c) { add_term(Word{}, c); }

OpExpr::OpExpr(const Word& w, const ScalarCoeff& c) { add_term(w, c); }

bool OpExpr::is_normal_ordered() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_normal_ordered(); });
}

int OpExpr::max_word_length() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

ScalarCoeff OpExpr::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? ScalarCoeff{} : it->second;
}

void OpExpr::add_term(const Word& w, const ScalarCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpExpr& OpExpr::operator+=(const OpExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

OpExpr& OpExpr::operator-=(const OpExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

OpExpr& OpExpr::operator*=(const ScalarCoeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  // Products of nonzero ScalarCoeffs can cancel only through parameter sums.
  std::map<Word, ScalarCoeff> scaled;
  for (auto& [w, coeff] : terms_) {
    ScalarCoeff v = coeff * c;
    if (!v.is_zero()) scaled.emplace(w, std::move(v));
  }
  terms_ = std::move(scaled);
  return *this;
}

OpExpr operator-(const OpExpr& a) {
  OpExpr out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

OpExpr operator*(const OpExpr& a, const OpExpr& b) { return multiply(a, b); }

bool operator==(const OpExpr& a, const OpExpr& b) { return equals(a, b); }

std::string OpExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [word, coeff] = *it;
    bool negative = false;
    std::string factors;
    if (coeff.terms().size() == 1) {
      const auto& [params, value] = *coeff.terms().begin();
      auto piece = text::monomial(value, params);
      negative = piece.negative;
      factors = piece.factors;
    } else {
      factors = "(" + coeff.to_string() + ")";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (!factors.empty()) out += factors + "*";
    out += word.to_string();
    first = false;
  }
  return out;
}

OpExpr multiply(const OpExpr& a, const OpExpr& b) {
  OpExpr out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa * wb, ca * cb);
  return out;
}

namespace {

// Gaussian integer with arbitrary precision; normal ordering a single word
// only ever produces integer multiples of powers of i.
struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};
};

using OrderedForm = std::map<std::pair<unsigned, unsigned>, GaussInt>;

void accumulate(OrderedForm& form, std::pair<unsigned, unsigned> key, const mpz_class& re, const mpz_class& im) {
  auto& slot = form[key];
  slot.re += re;
  slot.im += im;
  if (slot.re == 0 && slot.im == 0) form.erase(key);
}

// X^i P^j X = X^(i+1) P^j - i j X^i P^(j-1);  X^i P^j P = X^i P^(j+1)
OrderedForm order_word(const Word& w) {
  OrderedForm form;
  form[{0u, 0u}] = GaussInt{1, 0};
  for (Symbol s : w.symbols()) {
    OrderedForm next;
    for (const auto& [key, v] : form) {
      const auto [xi, pj] = key;
      if (s == Symbol::P) {
        accumulate(next, {xi, pj + 1}, v.re, v.im);
        continue;
      }
      accumulate(next, {xi + 1, pj}, v.re, v.im);
      if (pj > 0) {
        // (-i j) * (re + i im) = j im - i j re
        mpz_class j = pj;
        accumulate(next, {xi, pj - 1}, j * v.im, -j * v.re);
      }
    }
    form = std::move(next);
  }
  return form;
}

}  // namespace

OpExpr normal_order(const OpExpr& e) {
  OpExpr out;
  for (const auto& [w, c] : e.terms()) {
    if (w.is_normal_ordered()) {
      out.add_term(w, c);
      continue;
    }
    for (const auto& [key, v] : order_word(w)) {
      ScalarCoeff factor(ComplexRational{Rational(v.re), Rational(v.im)});
      out.add_term(Word::ordered(key.first, key.second), factor * c);
    }
  }
  return out;
}

OpExpr commutator(const OpExpr& a, const OpExpr& b) { return normal_order(multiply(a, b) - multiply(b, a)); }

bool equals(const OpExpr& a, const OpExpr& b) { return normal_order(a - b).is_zero(); }

OpExpr power(const OpExpr& e, unsigned n) {
  OpExpr out = OpExpr::identity();
  for (unsigned k = 0; k < n; ++k) out = multiply(out, e);
  return out;
}

InversePowerTerm inverse_power_rule(int n) {
  if (n < 1) throw std::invalid_argument("inverse_power_rule: n must be >= 1 (X^0 commutes with P)");
  return {-n - 1, ScalarCoeff(Rational(0), Rational(-n))};
}

}  // namespace ccr
