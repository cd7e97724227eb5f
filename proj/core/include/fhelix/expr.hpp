#pragma once

// Expression trees for curve components alpha_i(s) and scalar fields f(x1..xn).
//
// Grammar (highest precedence first):
//   atom    := number | 'pi' | 'e' | 's' | 'x'<k> | func '(' expr ')' | '(' expr ')'
//   power   := atom ('^' unary)?            right-associative, exponent must be constant
//   unary   := '-' unary | power
//   term    := unary (('*' | '/') unary)*
//   expr    := term (('+' | '-') term)*
// func is one of sin, cos, exp, sqrt, ln.

#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "fhelix/errors.hpp"

namespace fhelix {

enum class UnaryOp { neg, sin, cos, exp, sqrt, ln };
enum class BinaryOp { add, sub, mul, div, pow };

/// Which free symbol an expression may use: `s` for curve components, `x1..xn` for fields.
enum class ExprKind { curve, field };

std::string_view to_string(UnaryOp op) noexcept;
std::string_view to_string(BinaryOp op) noexcept;

struct ExprNode;

/// Immutable expression handle. Copies share the underlying tree.
class Expr {
 public:
  /// The constant 0.
  Expr();

  static Expr constant(double value, std::string name = {});
  static Expr param();
  static Expr coord(int index);
  static Expr unary(UnaryOp op, Expr child);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  const ExprNode& node() const noexcept { return *node_; }

  /// True when neither `s` nor any coordinate occurs in the tree.
  bool is_constant() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const ExprNode> node_;
};

struct ConstantNode {
  double value = 0.0;
  std::string name;  // "pi" or "e" for named constants, empty for literals
};
struct ParamNode {};
struct CoordNode {
  int index = 1;  // 1-based
};
struct UnaryNode {
  UnaryOp op;
  Expr child;
};
struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};

struct ExprNode {
  std::variant<ConstantNode, ParamNode, CoordNode, UnaryNode, BinaryNode> value;
};

enum class TokenKind { number, identifier, plus, minus, star, slash, caret, lparen, rparen };

struct Token {
  TokenKind kind;
  std::string text;
  double number = 0.0;
  std::size_t position = 0;  // byte offset of the first character

  friend bool operator==(const Token&, const Token&) = default;
};

std::vector<Token> tokenize(std::string_view source);

Expr parse_expression(std::span<const Token> tokens, ExprKind kind, int dimension);
Expr parse_expression(std::string_view source, ExprKind kind, int dimension);

/// Prints with the minimum parentheses needed for parse_expression to rebuild the same tree.
std::string to_string(const Expr& expr);

/// Value of a constant sub-expression (exponents); throws invalid_value if it is not constant.
double constant_value(const Expr& expr);

/// Generic scalar fallback for constant powers; jet types provide their own overloads.
template <class T>
T power(const T& base, double exponent) {
  using std::pow;
  return pow(base, T(exponent));
}

/// Evaluates `expr` over any scalar type T that supports + - * /, unary -,
/// sin cos exp sqrt log (found by ADL or std), and `power(T, double)`.
/// `leaf` maps Param and Coord nodes to T; constants are converted with `make_constant`.
template <class T, class Leaf, class MakeConstant>
T evaluate_with(const Expr& expr, const Leaf& leaf, const MakeConstant& make_constant) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  const auto& v = expr.node().value;
  if (const auto* c = std::get_if<ConstantNode>(&v)) return make_constant(c->value);
  if (std::holds_alternative<ParamNode>(v)) return leaf(ParamNode{});
  if (const auto* x = std::get_if<CoordNode>(&v)) return leaf(*x);
  if (const auto* u = std::get_if<UnaryNode>(&v)) {
    T a = evaluate_with<T>(u->child, leaf, make_constant);
    switch (u->op) {
      case UnaryOp::neg: return -a;
      case UnaryOp::sin: return sin(a);
      case UnaryOp::cos: return cos(a);
      case UnaryOp::exp: return exp(a);
      case UnaryOp::sqrt: return sqrt(a);
      case UnaryOp::ln: return log(a);
    }
  }
  const auto& b = std::get<BinaryNode>(v);
  if (b.op == BinaryOp::pow) {
    return power(evaluate_with<T>(b.lhs, leaf, make_constant), constant_value(b.rhs));
  }
  T l = evaluate_with<T>(b.lhs, leaf, make_constant);
  T r = evaluate_with<T>(b.rhs, leaf, make_constant);
  switch (b.op) {
    case BinaryOp::add: return l + r;
    case BinaryOp::sub: return l - r;
    case BinaryOp::mul: return l * r;
    case BinaryOp::div: return l / r;
    case BinaryOp::pow: break;
  }
  return l;
}

/// Plain pointwise evaluation in scalar type T (double, or a wider float in test oracles).
template <class T>
T evaluate_as(const Expr& expr, const T& s, std::span<const T> x) {
  return evaluate_with<T>(
      expr,
      [&](const auto& leaf) -> T {
        if constexpr (std::is_same_v<std::decay_t<decltype(leaf)>, CoordNode>) {
          const auto i = static_cast<std::size_t>(leaf.index - 1);
          if (i >= x.size()) throw Error(ErrorCode::invalid_value, "coordinate x" + std::to_string(leaf.index) + " not supplied");
          return x[i];
        } else {
          return s;
        }
      },
      [](double c) { return T(c); });
}

double evaluate(const Expr& expr, double s, std::span<const double> x = {});

}  // namespace fhelix
