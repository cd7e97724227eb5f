#include "fhelix/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <numbers>
#include <system_error>

namespace fhelix {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::illegal_character: return "IllegalCharacter";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unknown_identifier: return "UnknownIdentifier";
    case ErrorCode::coord_out_of_range: return "CoordOutOfRange";
    case ErrorCode::wrong_symbol_kind: return "WrongSymbolKind";
    case ErrorCode::non_constant_exponent: return "NonConstantExponent";
    case ErrorCode::missing_field: return "MissingField";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::invalid_value: return "InvalidValue";
    case ErrorCode::io_error: return "IOError";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::insufficient_order: return "InsufficientOrder";
    case ErrorCode::degenerate_curve: return "DegenerateCurve";
    case ErrorCode::not_regular: return "NotRegular";
    case ErrorCode::degenerate_curvature: return "DegenerateCurvature";
    case ErrorCode::empty_input: return "EmptyInput";
  }
  return "Unknown";
}

std::string_view to_string(UnaryOp op) noexcept {
  switch (op) {
    case UnaryOp::neg: return "-";
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::exp: return "exp";
    case UnaryOp::sqrt: return "sqrt";
    case UnaryOp::ln: return "ln";
  }
  return "?";
}

std::string_view to_string(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::add: return "+";
    case BinaryOp::sub: return "-";
    case BinaryOp::mul: return "*";
    case BinaryOp::div: return "/";
    case BinaryOp::pow: return "^";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Expr

Expr::Expr() : Expr(constant(0.0)) {}

Expr Expr::constant(double value, std::string name) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{ConstantNode{value, std::move(name)}}));
}

Expr Expr::param() { return Expr(std::make_shared<const ExprNode>(ExprNode{ParamNode{}})); }

Expr Expr::coord(int index) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{CoordNode{index}}));
}

Expr Expr::unary(UnaryOp op, Expr child) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{UnaryNode{op, std::move(child)}}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(
      std::make_shared<const ExprNode>(ExprNode{BinaryNode{op, std::move(lhs), std::move(rhs)}}));
}

bool Expr::is_constant() const {
  const auto& v = node_->value;
  if (std::holds_alternative<ConstantNode>(v)) return true;
  if (const auto* u = std::get_if<UnaryNode>(&v)) return u->child.is_constant();
  if (const auto* b = std::get_if<BinaryNode>(&v)) return b->lhs.is_constant() && b->rhs.is_constant();
  return false;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node_->value;
  const auto& vb = b.node_->value;
  if (va.index() != vb.index()) return false;
  if (const auto* c = std::get_if<ConstantNode>(&va)) {
    const auto& d = std::get<ConstantNode>(vb);
    return c->value == d.value && c->name == d.name;
  }
  if (std::holds_alternative<ParamNode>(va)) return true;
  if (const auto* x = std::get_if<CoordNode>(&va)) return x->index == std::get<CoordNode>(vb).index;
  if (const auto* u = std::get_if<UnaryNode>(&va)) {
    const auto& w = std::get<UnaryNode>(vb);
    return u->op == w.op && u->child == w.child;
  }
  const auto& l = std::get<BinaryNode>(va);
  const auto& r = std::get<BinaryNode>(vb);
  return l.op == r.op && l.lhs == r.lhs && l.rhs == r.rhs;
}

double constant_value(const Expr& expr) {
  if (!expr.is_constant()) {
    throw Error(ErrorCode::invalid_value, "expression is not constant: " + to_string(expr));
  }
  return evaluate(expr, 0.0);
}

double evaluate(const Expr& expr, double s, std::span<const double> x) {
  return evaluate_as<double>(expr, s, x);
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::size_t scan_number(std::string_view src, std::size_t i) {
  const std::size_t n = src.size();
  while (i < n && is_digit(src[i])) ++i;
  if (i < n && src[i] == '.') {
    ++i;
    while (i < n && is_digit(src[i])) ++i;
  }
  if (i < n && (src[i] == 'e' || src[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < n && (src[j] == '+' || src[j] == '-')) ++j;
    if (j < n && is_digit(src[j])) {
      while (j < n && is_digit(src[j])) ++j;
      i = j;
    }
  }
  return i;
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < source.size()) {
    const char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < source.size() && is_digit(source[i + 1]))) {
      const std::size_t end = scan_number(source, i);
      Token t{TokenKind::number, std::string(source.substr(i, end - i)), 0.0, i};
      auto [ptr, ec] = std::from_chars(source.data() + i, source.data() + end, t.number);
      if (ec != std::errc() || ptr != source.data() + end) {
        throw ParseError(ErrorCode::syntax_error,
                         "malformed number '" + t.text + "' at offset " + std::to_string(i), i);
      }
      tokens.push_back(std::move(t));
      i = end;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t end = i + 1;
      while (end < source.size() && is_ident_char(source[end])) ++end;
      tokens.push_back({TokenKind::identifier, std::string(source.substr(i, end - i)), 0.0, i});
      i = end;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      default:
        throw ParseError(ErrorCode::illegal_character,
                         "illegal character '" + std::string(1, c) + "' at offset " + std::to_string(i), i);
    }
    tokens.push_back({kind, std::string(1, c), 0.0, i});
    ++i;
  }
  return tokens;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct FunctionName {
  std::string_view name;
  UnaryOp op;
};

constexpr std::array<FunctionName, 5> kFunctions{{
    {"sin", UnaryOp::sin},
    {"cos", UnaryOp::cos},
    {"exp", UnaryOp::exp},
    {"sqrt", UnaryOp::sqrt},
    {"ln", UnaryOp::ln},
}};

class Parser {
 public:
  Parser(std::span<const Token> tokens, ExprKind kind, int dimension)
      : tokens_(tokens), kind_(kind), dimension_(dimension) {}

  Expr parse() {
    if (tokens_.empty()) throw ParseError(ErrorCode::syntax_error, "empty expression", 0);
    Expr e = expression();
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      throw ParseError(ErrorCode::syntax_error,
                       "unexpected '" + t.text + "' at offset " + std::to_string(t.position), t.position);
    }
    return e;
  }

 private:
  bool at(TokenKind k) const { return pos_ < tokens_.size() && tokens_[pos_].kind == k; }

  std::size_t here() const {
    if (pos_ < tokens_.size()) return tokens_[pos_].position;
    if (tokens_.empty()) return 0;
    const Token& last = tokens_.back();
    return last.position + last.text.size();
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string got = pos_ < tokens_.size() ? "'" + tokens_[pos_].text + "'" : "end of input";
    throw ParseError(ErrorCode::syntax_error,
                     "expected " + expected + " but found " + got + " at offset " + std::to_string(here()),
                     here());
  }

  void expect(TokenKind k, const char* what) {
    if (!at(k)) fail(what);
    ++pos_;
  }

  Expr expression() {
    Expr lhs = term();
    while (at(TokenKind::plus) || at(TokenKind::minus)) {
      const BinaryOp op = at(TokenKind::plus) ? BinaryOp::add : BinaryOp::sub;
      ++pos_;
      lhs = Expr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (at(TokenKind::star) || at(TokenKind::slash)) {
      const BinaryOp op = at(TokenKind::star) ? BinaryOp::mul : BinaryOp::div;
      ++pos_;
      lhs = Expr::binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (at(TokenKind::minus)) {
      ++pos_;
      return Expr::unary(UnaryOp::neg, unary());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!at(TokenKind::caret)) return base;
    ++pos_;
    const std::size_t exponent_pos = here();
    Expr exponent = unary();
    if (!exponent.is_constant()) {
      throw ParseError(ErrorCode::non_constant_exponent,
                       "exponent at offset " + std::to_string(exponent_pos) + " must be constant",
                       exponent_pos);
    }
    return Expr::binary(BinaryOp::pow, std::move(base), std::move(exponent));
  }

  Expr atom() {
    if (pos_ >= tokens_.size()) fail("operand");
    const Token& t = tokens_[pos_];
    switch (t.kind) {
      case TokenKind::number:
        ++pos_;
        return Expr::constant(t.number);
      case TokenKind::lparen: {
        ++pos_;
        Expr inner = expression();
        expect(TokenKind::rparen, "')'");
        return inner;
      }
      case TokenKind::identifier:
        ++pos_;
        return identifier(t);
      default:
        fail("operand");
    }
  }

  Expr identifier(const Token& t) {
    for (const auto& f : kFunctions) {
      if (t.text == f.name) {
        expect(TokenKind::lparen, "'(' after function name");
        Expr arg = expression();
        expect(TokenKind::rparen, "')'");
        return Expr::unary(f.op, std::move(arg));
      }
    }
    if (t.text == "pi") return Expr::constant(std::numbers::pi, "pi");
    if (t.text == "e") return Expr::constant(std::numbers::e, "e");
    if (t.text == "s") {
      if (kind_ != ExprKind::curve) {
        throw ParseError(ErrorCode::wrong_symbol_kind,
                         "parameter 's' is not allowed in a field expression (offset " +
                             std::to_string(t.position) + ")",
                         t.position);
      }
      return Expr::param();
    }
    if (t.text.size() >= 2 && t.text[0] == 'x' &&
        t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
      if (kind_ != ExprKind::field) {
        throw ParseError(ErrorCode::wrong_symbol_kind,
                         "coordinate '" + t.text + "' is not allowed in a curve component (offset " +
                             std::to_string(t.position) + ")",
                         t.position);
      }
      int index = 0;
      const auto [p, ec] = std::from_chars(t.text.data() + 1, t.text.data() + t.text.size(), index);
      if (ec != std::errc() || index < 1 || index > dimension_) {
        throw ParseError(ErrorCode::coord_out_of_range,
                         "coordinate " + t.text + " out of range 1.." + std::to_string(dimension_) +
                             " (CoordOutOfRange(" + t.text.substr(1) + "," + std::to_string(dimension_) + "))",
                         t.position);
      }
      return Expr::coord(index);
    }
    throw ParseError(ErrorCode::unknown_identifier,
                     "unknown identifier '" + t.text + "' at offset " + std::to_string(t.position),
                     t.position);
  }

  std::span<const Token> tokens_;
  ExprKind kind_;
  int dimension_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer; higher binds tighter.
constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecNeg = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

int precedence(const Expr& e) {
  const auto& v = e.node().value;
  if (const auto* u = std::get_if<UnaryNode>(&v)) return u->op == UnaryOp::neg ? kPrecNeg : kPrecAtom;
  if (const auto* b = std::get_if<BinaryNode>(&v)) {
    switch (b->op) {
      case BinaryOp::add:
      case BinaryOp::sub: return kPrecAdd;
      case BinaryOp::mul:
      case BinaryOp::div: return kPrecMul;
      case BinaryOp::pow: return kPrecPow;
    }
  }
  if (const auto* c = std::get_if<ConstantNode>(&v); c && c->name.empty() && std::signbit(c->value)) {
    return kPrecNeg;
  }
  return kPrecAtom;
}

void print(const Expr& e, std::string& out);

void print_operand(const Expr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

void print_number(double value, std::string& out) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  out.append(buf.data(), ptr);
}

void print(const Expr& e, std::string& out) {
  const auto& v = e.node().value;
  if (const auto* c = std::get_if<ConstantNode>(&v)) {
    if (!c->name.empty()) {
      out += c->name;
    } else {
      print_number(c->value, out);
    }
    return;
  }
  if (std::holds_alternative<ParamNode>(v)) {
    out += 's';
    return;
  }
  if (const auto* x = std::get_if<CoordNode>(&v)) {
    out += 'x';
    out += std::to_string(x->index);
    return;
  }
  if (const auto* u = std::get_if<UnaryNode>(&v)) {
    if (u->op == UnaryOp::neg) {
      out += '-';
      print_operand(u->child, kPrecNeg, out);
    } else {
      out += to_string(u->op);
      out += '(';
      print(u->child, out);
      out += ')';
    }
    return;
  }
  const auto& b = std::get<BinaryNode>(v);
  switch (b.op) {
    case BinaryOp::add:
    case BinaryOp::sub:
      print_operand(b.lhs, kPrecAdd, out);
      out += b.op == BinaryOp::add ? " + " : " - ";
      print_operand(b.rhs, kPrecMul, out);
      break;
    case BinaryOp::mul:
    case BinaryOp::div:
      print_operand(b.lhs, kPrecMul, out);
      out += to_string(b.op);
      print_operand(b.rhs, kPrecNeg, out);
      break;
    case BinaryOp::pow:
      print_operand(b.lhs, kPrecAtom, out);
      out += '^';
      print_operand(b.rhs, kPrecNeg, out);
      break;
  }
}

}  // namespace

Expr parse_expression(std::span<const Token> tokens, ExprKind kind, int dimension) {
  return Parser(tokens, kind, dimension).parse();
}

Expr parse_expression(std::string_view source, ExprKind kind, int dimension) {
  const auto tokens = tokenize(source);
  return parse_expression(std::span<const Token>(tokens), kind, dimension);
}

std::string to_string(const Expr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

}  // namespace fhelix
