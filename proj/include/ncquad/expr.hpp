#pragma once

#include "ncquad/real.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncquad {

// Syntax error with the byte offset of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
  size_t offset;
};

// Domain violation during evaluation, located at the responsible node.
struct EvalError : std::runtime_error {
  EvalError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"), offset(offset) {}
  size_t offset;
};

enum class UnaryOp { Sqrt, Exp, Ln, Sin, Cos, Erf, Neg };
enum class BinaryOp { Add, Sub, Mul, Div };

struct ExprNode {
  enum class Kind { Constant, Variable, Unary, Binary, Power };
  Kind kind;
  size_t offset = 0;       // byte offset in the source, for diagnostics
  std::string literal;     // Constant: the decimal text, parsed at eval precision
  UnaryOp uop{};
  BinaryOp bop{};
  long exponent = 0;       // Power
  std::unique_ptr<ExprNode> lhs;
  std::unique_ptr<ExprNode> rhs;
};

// Immutable after parse; cheap to copy and share.
struct ExprAst {
  std::shared_ptr<const ExprNode> root;
  std::string source;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' integer)?
//   base   := number | 'x' | func '(' expr ')' | '(' expr ')'
//   func   := sqrt | exp | ln | sin | cos | erf
ExprAst parse(std::string_view source);

// Value at x, computed at the requested precision. Constants are parsed at
// that precision, so the same AST serves any number of digits.
Real eval(const ExprAst& ast, const Real& x, int precision);

// Truncated Taylor expansion around `center`: coefficients[k] = f^(k)(center)/k!.
struct TaylorJet {
  Real center;
  std::vector<Real> coefficients;  // size order+1
  int order = 0;

  Real derivative(int j) const;  // j! * coefficients[j]
};

// Degree-m expansion via Taylor-mode (jet) arithmetic; m >= 1.
TaylorJet jet_eval(const ExprAst& ast, const Real& center, int order, int precision);

}  // namespace ncquad
