#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ccr/op_expr.hpp"

namespace ccr {

/// Syntax error annotated with the byte offset where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses operator expressions:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' uint)*
///   primary:= rational | '(' rational ',' rational ')' | name | 'X' | 'P' | '(' expr ')'
///
/// Products keep their written order. A bare parameter name may take a
/// negative exponent (m^-1); X, P and parenthesized groups may not.
OpExpr parse_expression(std::string_view text);

}  // namespace ccr
