#include "ncquad/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace ncquad {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::unique_ptr<ExprNode> run() {
    auto node = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return node;
  }

 private:
  std::string_view src_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::unique_ptr<ExprNode> expr() {
    auto node = term();
    while (true) {
      size_t at = pos_;
      if (consume('+')) {
        node = binary(BinaryOp::Add, at, std::move(node), term());
      } else if (consume('-')) {
        node = binary(BinaryOp::Sub, at, std::move(node), term());
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<ExprNode> term() {
    auto node = factor();
    while (true) {
      size_t at = pos_;
      if (consume('*')) {
        node = binary(BinaryOp::Mul, at, std::move(node), factor());
      } else if (consume('/')) {
        node = binary(BinaryOp::Div, at, std::move(node), factor());
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<ExprNode> factor() {
    skip_ws();
    size_t at = pos_;
    if (consume('-')) {
      auto node = std::make_unique<ExprNode>();
      node->kind = ExprNode::Kind::Unary;
      node->uop = UnaryOp::Neg;
      node->offset = at;
      node->lhs = factor();
      return node;
    }
    auto node = base();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      size_t caret = pos_++;
      long e = integer_exponent();
      auto p = std::make_unique<ExprNode>();
      p->kind = ExprNode::Kind::Power;
      p->offset = caret;
      p->exponent = e;
      p->lhs = std::move(node);
      return p;
    }
    return node;
  }

  long integer_exponent() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      neg = src_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("'^' requires an integer exponent");
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > 1000000) {
        pos_ = start;
        fail("exponent too large");
      }
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::unique_ptr<ExprNode> base() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    size_t at = pos_;
    char c = src_[pos_];

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(at);

    if (c == '(') {
      ++pos_;
      auto node = expr();
      if (!consume(')')) fail("expected ')'");
      return node;
    }

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        name += src_[pos_++];
      if (name == "x") {
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::Variable;
        node->offset = at;
        return node;
      }
      UnaryOp op;
      if (name == "sqrt") {
        op = UnaryOp::Sqrt;
      } else if (name == "exp") {
        op = UnaryOp::Exp;
      } else if (name == "ln") {
        op = UnaryOp::Ln;
      } else if (name == "sin") {
        op = UnaryOp::Sin;
      } else if (name == "cos") {
        op = UnaryOp::Cos;
      } else if (name == "erf") {
        op = UnaryOp::Erf;
      } else {
        pos_ = at;
        fail("unknown function '" + name + "'");
      }
      if (!consume('(')) fail("expected '(' after function name");
      auto arg = expr();
      if (!consume(')')) fail("expected ')'");
      auto node = std::make_unique<ExprNode>();
      node->kind = ExprNode::Kind::Unary;
      node->uop = op;
      node->offset = at;
      node->lhs = std::move(arg);
      return node;
    }

    fail(std::string("unexpected character '") + c + "'");
  }

  std::unique_ptr<ExprNode> number(size_t at) {
    std::string lit;
    bool any_digit = false;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      lit += src_[pos_++];
      any_digit = true;
    }
    if (pos_ < src_.size() && src_[pos_] == '.') {
      lit += src_[pos_++];
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        lit += src_[pos_++];
        any_digit = true;
      }
    }
    if (!any_digit) fail("malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      size_t mark = pos_;
      std::string suffix;
      suffix += src_[pos_++];
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) suffix += src_[pos_++];
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          suffix += src_[pos_++];
        lit += suffix;
      } else {
        pos_ = mark;  // 'e' belongs to something else; not part of the number
      }
    }
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::Constant;
    node->offset = at;
    node->literal = lit;
    return node;
  }

  static std::unique_ptr<ExprNode> binary(BinaryOp op, size_t at, std::unique_ptr<ExprNode> l,
                                          std::unique_ptr<ExprNode> r) {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::Binary;
    node->bop = op;
    node->offset = at;
    node->lhs = std::move(l);
    node->rhs = std::move(r);
    return node;
  }
};

}  // namespace

ExprAst parse(std::string_view source) {
  Parser p(source);
  return ExprAst{std::shared_ptr<const ExprNode>(p.run().release()), std::string(source)};
}

// ---------------------------------------------------------------------------
// Plain evaluation

namespace {

Real eval_node(const ExprNode& node, const Real& x, int p) {
  switch (node.kind) {
    case ExprNode::Kind::Constant:
      return Real::parse(node.literal, p);
    case ExprNode::Kind::Variable:
      return x;
    case ExprNode::Kind::Unary: {
      Real a = eval_node(*node.lhs, x, p);
      switch (node.uop) {
        case UnaryOp::Sqrt:
          if (a.sign() < 0) throw EvalError("sqrt of a negative value", node.offset);
          return sqrt(a);
        case UnaryOp::Exp:
          return exp(a);
        case UnaryOp::Ln:
          if (a.sign() <= 0) throw EvalError("ln of a non-positive value", node.offset);
          return log(a);
        case UnaryOp::Sin:
          return sin(a);
        case UnaryOp::Cos:
          return cos(a);
        case UnaryOp::Erf:
          return erf(a);
        case UnaryOp::Neg:
          return -a;
      }
      break;
    }
    case ExprNode::Kind::Binary: {
      Real a = eval_node(*node.lhs, x, p);
      Real b = eval_node(*node.rhs, x, p);
      switch (node.bop) {
        case BinaryOp::Add:
          return a + b;
        case BinaryOp::Sub:
          return a - b;
        case BinaryOp::Mul:
          return a * b;
        case BinaryOp::Div:
          if (b.is_zero()) throw EvalError("division by zero", node.offset);
          return a / b;
      }
      break;
    }
    case ExprNode::Kind::Power: {
      Real a = eval_node(*node.lhs, x, p);
      if (a.is_zero() && node.exponent < 0)
        throw EvalError("zero raised to a negative power", node.offset);
      return a.pow_int(node.exponent);
    }
  }
  throw EvalError("malformed expression node", node.offset);
}

}  // namespace

Real eval(const ExprAst& ast, const Real& x, int precision) {
  if (!ast.root) throw EvalError("empty expression", 0);
  return eval_node(*ast.root, x.with_digits(precision), precision);
}

// ---------------------------------------------------------------------------
// Taylor-mode (jet) arithmetic. A jet is the vector of Taylor coefficients
// c_0..c_m at the expansion point; standard truncated recurrences throughout.

namespace {

using Jet = std::vector<Real>;

Jet jet_fill(int m, int p) { return Jet(static_cast<size_t>(m) + 1, Real::zero(p)); }

Jet jadd(const Jet& a, const Jet& b) {
  Jet r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Jet jsub(const Jet& a, const Jet& b) {
  Jet r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Jet jneg(const Jet& a) {
  Jet r = a;
  for (auto& c : r) c = -c;
  return r;
}

Jet jmul(const Jet& a, const Jet& b, int p) {
  const int m = static_cast<int>(a.size()) - 1;
  Jet r = jet_fill(m, p);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; i + j <= m; ++j) r[i + j] += a[i] * b[j];
  return r;
}

Jet jdiv(const Jet& a, const Jet& b, int p) {
  const int m = static_cast<int>(a.size()) - 1;
  Jet r = jet_fill(m, p);
  for (int k = 0; k <= m; ++k) {
    Real acc = a[k];
    for (int j = 0; j < k; ++j) acc -= r[j] * b[k - j];
    r[k] = acc / b[0];
  }
  return r;
}

Jet jsqrt(const Jet& a, int p) {
  const int m = static_cast<int>(a.size()) - 1;
  Jet r = jet_fill(m, p);
  r[0] = sqrt(a[0]);
  for (int k = 1; k <= m; ++k) {
    Real acc = a[k];
    for (int j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (r[0] * 2);
  }
  return r;
}

Jet jexp(const Jet& a, int p) {
  const int m = static_cast<int>(a.size()) - 1;
  Jet r = jet_fill(m, p);
  r[0] = exp(a[0]);
  for (int k = 1; k <= m; ++k) {
    Real acc = Real::zero(p);
    for (int j = 1; j <= k; ++j) acc += a[j] * static_cast<long>(j) * r[k - j];
    r[k] = acc / static_cast<long>(k);
  }
  return r;
}

Jet jln(const Jet& a, int p) {
  const int m = static_cast<int>(a.size()) - 1;
  Jet r = jet_fill(m, p);
  r[0] = log(a[0]);
  for (int k = 1; k <= m; ++k) {
    Real acc = a[k] * static_cast<long>(k);
    for (int j = 1; j < k; ++j) acc -= r[j] * static_cast<long>(j) * a[k - j];
    r[k] = acc / a[0] / static_cast<long>(k);
  }
  return r;
}

void jsincos(const Jet& a, int p, Jet& s, Jet& c) {
  const int m = static_cast<int>(a.size()) - 1;
  s = jet_fill(m, p);
  c = jet_fill(m, p);
  s[0] = sin(a[0]);
  c[0] = cos(a[0]);
  for (int k = 1; k <= m; ++k) {
    Real sa = Real::zero(p);
    Real ca = Real::zero(p);
    for (int j = 1; j <= k; ++j) {
      sa += a[j] * static_cast<long>(j) * c[k - j];
      ca += a[j] * static_cast<long>(j) * s[k - j];
    }
    s[k] = sa / static_cast<long>(k);
    c[k] = -(ca / static_cast<long>(k));
  }
}

Jet jerf(const Jet& a, int p) {
  const int m = static_cast<int>(a.size()) - 1;
  // d/dt erf(u) = (2/sqrt(pi)) exp(-u^2) u'
  Jet g = jexp(jneg(jmul(a, a, p)), p);
  const Real scale = Real::from_long(2, p) / sqrt(Real::pi(p));
  for (auto& c : g) c = c * scale;
  Jet r = jet_fill(m, p);
  r[0] = erf(a[0]);
  for (int k = 1; k <= m; ++k) {
    Real acc = Real::zero(p);
    for (int j = 1; j <= k; ++j) acc += a[j] * static_cast<long>(j) * g[k - j];
    r[k] = acc / static_cast<long>(k);
  }
  return r;
}

Jet jone(int m, int p) {
  Jet r = jet_fill(m, p);
  r[0] = Real::from_long(1, p);
  return r;
}

Jet jpow_int(const Jet& a, long e, int p) {
  const int m = static_cast<int>(a.size()) - 1;
  if (e == 0) return jone(m, p);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Jet acc = jone(m, p);
  Jet base = a;
  while (k > 0) {
    if (k & 1) acc = jmul(acc, base, p);
    k >>= 1;
    if (k > 0) base = jmul(base, base, p);
  }
  return invert ? jdiv(jone(m, p), acc, p) : acc;
}

Jet jet_node(const ExprNode& node, const Real& x, int m, int p) {
  switch (node.kind) {
    case ExprNode::Kind::Constant: {
      Jet r = jet_fill(m, p);
      r[0] = Real::parse(node.literal, p);
      return r;
    }
    case ExprNode::Kind::Variable: {
      Jet r = jet_fill(m, p);
      r[0] = x;
      if (m >= 1) r[1] = Real::from_long(1, p);
      return r;
    }
    case ExprNode::Kind::Unary: {
      Jet a = jet_node(*node.lhs, x, m, p);
      switch (node.uop) {
        case UnaryOp::Sqrt:
          if (a[0].sign() <= 0)
            throw EvalError("sqrt expansion requires a positive argument", node.offset);
          return jsqrt(a, p);
        case UnaryOp::Exp:
          return jexp(a, p);
        case UnaryOp::Ln:
          if (a[0].sign() <= 0) throw EvalError("ln of a non-positive value", node.offset);
          return jln(a, p);
        case UnaryOp::Sin: {
          Jet s, c;
          jsincos(a, p, s, c);
          return s;
        }
        case UnaryOp::Cos: {
          Jet s, c;
          jsincos(a, p, s, c);
          return c;
        }
        case UnaryOp::Erf:
          return jerf(a, p);
        case UnaryOp::Neg:
          return jneg(a);
      }
      break;
    }
    case ExprNode::Kind::Binary: {
      Jet a = jet_node(*node.lhs, x, m, p);
      Jet b = jet_node(*node.rhs, x, m, p);
      switch (node.bop) {
        case BinaryOp::Add:
          return jadd(a, b);
        case BinaryOp::Sub:
          return jsub(a, b);
        case BinaryOp::Mul:
          return jmul(a, b, p);
        case BinaryOp::Div:
          if (b[0].is_zero())
            throw EvalError("division by an expansion with zero constant term", node.offset);
          return jdiv(a, b, p);
      }
      break;
    }
    case ExprNode::Kind::Power: {
      Jet a = jet_node(*node.lhs, x, m, p);
      if (a[0].is_zero() && node.exponent < 0)
        throw EvalError("zero raised to a negative power", node.offset);
      return jpow_int(a, node.exponent, p);
    }
  }
  throw EvalError("malformed expression node", node.offset);
}

}  // namespace

Real TaylorJet::derivative(int j) const {
  if (j < 0 || j > order) throw std::invalid_argument("derivative order out of range");
  Real f = coefficients[j];
  for (long i = 2; i <= j; ++i) f = f * i;
  return f;
}

TaylorJet jet_eval(const ExprAst& ast, const Real& center, int order, int precision) {
  if (!ast.root) throw EvalError("empty expression", 0);
  if (order < 1) throw std::invalid_argument("jet_eval requires order >= 1");
  Real c = center.with_digits(precision);
  Jet j = jet_node(*ast.root, c, order, precision);
  return TaylorJet{std::move(c), std::move(j), order};
}

}  // namespace ncquad
