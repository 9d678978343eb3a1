#include "ccr/random.hpp"

namespace ccr {

Rational RandomAlgebra::rational(unsigned max_num, unsigned max_den) {
  long num = static_cast<long>(below(max_num)) + 1;
  if (below(2) == 0) num = -num;
  Rational q(num, static_cast<long>(below(max_den)) + 1);
  q.canonicalize();
  return q;
}

ScalarCoeff RandomAlgebra::scalar(bool complex) {
  if (!complex) return ScalarCoeff(rational());
  switch (below(3)) {
    case 0:
      return ScalarCoeff(rational());
    case 1:
      return ScalarCoeff(Rational(0), rational());
    default:
      return ScalarCoeff(rational(), rational());
  }
}

Word RandomAlgebra::word(unsigned max_length) {
  const auto length = static_cast<std::size_t>(below(max_length + 1));
  std::vector<Symbol> s(length);
  for (auto& v : s) v = below(2) == 0 ? Symbol::X : Symbol::P;
  return Word(std::move(s));
}

OpExpr RandomAlgebra::expr(unsigned max_terms, unsigned max_length) {
  OpExpr e;
  const auto terms = below(max_terms) + 1;
  for (std::uint64_t t = 0; t < terms; ++t) e.add_term(word(max_length), scalar());
  return e;
}

Polynomial RandomAlgebra::polynomial(unsigned max_degree, bool complex) {
  Polynomial q;
  q.add(max_degree, scalar(complex));
  for (unsigned d = 0; d < max_degree; ++d)
    if (below(3) != 0) q.add(d, scalar(complex));
  return q;
}

}  // namespace ccr
