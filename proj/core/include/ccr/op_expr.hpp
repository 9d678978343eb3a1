#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ccr/scalar.hpp"

namespace ccr {

/// The two noncommuting generators of the Weyl algebra.
enum class Symbol : std::uint8_t { X = 0, P = 1 };

/// A finite product of generators; the empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  /// X^x_power * P^p_power
  static Word ordered(unsigned x_power, unsigned p_power);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  /// True when no P precedes an X.
  bool is_normal_ordered() const;
  unsigned count(Symbol s) const;

  friend Word operator*(const Word& a, const Word& b);

  // Length first, then lexicographic with X < P.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  /// Run-length text such as "X^2*P"; the identity renders as "1".
  std::string to_string() const;

 private:
  std::vector<Symbol> symbols_;
};

/// Element of the free algebra over {X, P} with ScalarCoeff coefficients.
/// Zero coefficients are never stored. Equality compares the normal-ordered
/// forms, i.e. equality in the Weyl algebra; compare terms() directly for
/// structural identity.
class OpExpr {
 public:
  OpExpr() = default;
  OpExpr(const ScalarCoeff& c);  // NOLINT(google-explicit-constructor)
  OpExpr(const Word& w, const ScalarCoeff& c = ScalarCoeff(1));

  static OpExpr x() { return OpExpr(Word{Symbol::X}); }
  static OpExpr p() { return OpExpr(Word{Symbol::P}); }
  static OpExpr identity() { return OpExpr(Word{}); }

  const std::map<Word, ScalarCoeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal_ordered() const;
  /// Longest word length; -1 for zero.
  int max_word_length() const;
  ScalarCoeff coefficient(const Word& w) const;

  void add_term(const Word& w, const ScalarCoeff& c);

  OpExpr& operator+=(const OpExpr& o);
  OpExpr& operator-=(const OpExpr& o);
  OpExpr& operator*=(const ScalarCoeff& c);

  friend OpExpr operator+(OpExpr a, const OpExpr& b) { return a += b; }
  friend OpExpr operator-(OpExpr a, const OpExpr& b) { return a -= b; }
  friend OpExpr operator-(const OpExpr& a);
  friend OpExpr operator*(const ScalarCoeff& c, OpExpr e) { return e *= c; }
  friend OpExpr operator*(OpExpr e, const ScalarCoeff& c) { return e *= c; }
  friend OpExpr operator*(const OpExpr& a, const OpExpr& b);
  friend bool operator==(const OpExpr& a, const OpExpr& b);

  /// Canonical text, terms in descending word order, e.g. "(3/2)*X^2*P - (0,1)*1".
  std::string to_string() const;

 private:
  std::map<Word, ScalarCoeff> terms_;
};

/// Free concatenation product; the result is not normal-ordered.
OpExpr multiply(const OpExpr& a, const OpExpr& b);

/// Rewrites every word to X^j P^k form using PX -> XP - i.
OpExpr normal_order(const OpExpr& e);

/// normal_order(ab - ba)
OpExpr commutator(const OpExpr& a, const OpExpr& b);

/// Equality in the Weyl algebra.
bool equals(const OpExpr& a, const OpExpr& b);

/// e^n as a free product (not normal-ordered).
OpExpr power(const OpExpr& e, unsigned n);

/// Closed form of [X^-n, P] = -i n X^(-n-1). Negative powers never enter Word;
/// this is the only place they exist.
struct InversePowerTerm {
  int exponent;
  ScalarCoeff coefficient;
};
InversePowerTerm inverse_power_rule(int n);

}  // namespace ccr
