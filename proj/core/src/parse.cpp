#include "ccr/parse.hpp"

#include <cctype>
#include <optional>

namespace ccr {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument("syntax error at byte " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OpExpr parse() {
    OpExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    mpz_class num = integer();
    if (!accept('/')) return Rational(num);
    std::size_t at = pos_;
    mpz_class den = integer();
    if (den == 0) throw ParseError("zero denominator", at);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational signed_rational() {
    if (accept('-')) return -rational();
    accept('+');
    return rational();
  }

  // Parses "(re,im)" if present at the current position; restores on mismatch.
  std::optional<ComplexRational> complex_literal() {
    std::size_t save = pos_;
    try {
      expect('(');
      skip_space();
      if (pos_ >= text_.size() || !(std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                                    text_[pos_] == '+')) {
        pos_ = save;
        return std::nullopt;
      }
      Rational re = signed_rational();
      if (!accept(',')) {
        pos_ = save;
        return std::nullopt;
      }
      Rational im = signed_rational();
      expect(')');
      return ComplexRational{re, im};
    } catch (const ParseError&) {
      pos_ = save;
      return std::nullopt;
    }
  }

  OpExpr expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    OpExpr out = term();
    if (negate) out = -out;
    for (;;) {
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out -= term();
      else
        return out;
    }
  }

  OpExpr term() {
    OpExpr out = factor();
    while (accept('*')) out = multiply(out, factor());
    return out;
  }

  OpExpr factor() {
    std::optional<std::string> param;
    OpExpr base = primary(param);
    int param_power = 1;
    while (accept('^')) {
      std::size_t at = pos_;
      bool negative = accept('-');
      if (negative && !param) throw ParseError("negative powers are only allowed on parameter names", at);
      mpz_class n = integer();
      if (!n.fits_sint_p() || n > 1024) throw ParseError("exponent too large", at);
      int k = static_cast<int>(n.get_si());
      if (param) {
        param_power *= negative ? -k : k;
        base = param_power == 0 ? OpExpr(ScalarCoeff(1)) : OpExpr(ScalarCoeff::param(*param, param_power));
      } else {
        base = power(base, static_cast<unsigned>(k));
      }
    }
    return base;
  }

  OpExpr primary(std::optional<std::string>& param) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return OpExpr(ScalarCoeff(rational()));
    if (c == '(') {
      if (auto z = complex_literal()) return OpExpr(ScalarCoeff(*z));
      expect('(');
      OpExpr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "X") return OpExpr::x();
      if (name == "P") return OpExpr::p();
      param = name;
      return OpExpr(ScalarCoeff::param(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OpExpr parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace ccr
