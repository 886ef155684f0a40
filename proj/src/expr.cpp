#include "qfe/expr.hpp"

#include <cctype>

namespace qfe {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw ParseError(at, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t at) {
    Expr e;
    e.kind = kind;
    e.offset = at;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const std::size_t at = pos_++;
      lhs = binary(c == '+' ? Expr::Kind::add : Expr::Kind::sub, std::move(lhs), term(), at);
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      const std::size_t at = pos_++;
      Expr rhs = unary();
      if (c == '/' && rhs.kind == Expr::Kind::literal && rhs.value == 0)
        fail_at(rhs.offset, "zero denominator literal");
      lhs = binary(c == '*' ? Expr::Kind::mul : Expr::Kind::div, std::move(lhs), std::move(rhs), at);
    }
  }

  Expr unary() {
    if (peek() == '-') {
      Expr e;
      e.kind = Expr::Kind::neg;
      e.offset = pos_++;
      e.children.push_back(unary());
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek() != '^') return base;
    Expr e;
    e.kind = Expr::Kind::pow;
    e.offset = pos_++;
    const Integer exponent = exponent_value();
    if (abs(exponent) > kMaxExponent) fail_at(e.offset, "exponent too large");
    e.exponent = exponent.get_si();
    e.children.push_back(std::move(base));
    return e;
  }

  Integer exponent_value() {
    Integer base;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base = integer();
    } else if (c == '(') {
      ++pos_;
      const bool negative = accept('-');
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be an integer literal");
      base = integer();
      if (negative) base = -base;
      if (peek() == '/' || peek() == '.') fail("non-integer exponent");
      expect(')');
    } else {
      fail("exponent must be an integer literal");
    }
    if (peek() != '^') return base;
    const std::size_t at = pos_++;
    const Integer top = exponent_value();  // right-associative
    if (top < 0) {
      if (base == 1) return base;
      if (base == -1) return top % 2 == 0 ? Integer(1) : Integer(-1);
      fail_at(at, "non-integer exponent");
    }
    if (top > 64 && abs(base) > 1) fail_at(at, "exponent too large");
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), top.get_ui());
    return out;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::int64_t positive_argument() {
    const std::size_t at = (skip_space(), pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("qint arguments must be positive integer literals");
    const Integer v = integer();
    if (v < 1) fail_at(at, "qint arguments must be positive integer literals");
    if (v > kMaxExponent) fail_at(at, "qint argument too large");
    return v.get_si();
  }

  Expr primary() {
    const char c = peek();
    Expr e;
    e.offset = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = Expr::Kind::literal;
      e.value = integer();
      return e;
    }
    if (c == '(') {
      ++pos_;
      e.kind = Expr::Kind::group;
      e.children.push_back(expr());
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "q") {
        e.kind = Expr::Kind::variable;
        return e;
      }
      if (name == "qint") {
        e.kind = Expr::Kind::qint;
        expect('(');
        e.n = positive_argument();
        e.r = accept(',') ? positive_argument() : 1;
        expect(')');
        if ((e.n - 1) * e.r > kMaxExponent) fail_at(e.offset, "qint degree too large");
        return e;
      }
      fail_at(start, "unknown identifier '" + std::string(name) + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

RationalFunction eval_expr(const Expr& ast) {
  using K = Expr::Kind;
  switch (ast.kind) {
    case K::literal:
      return RationalFunction::constant(Rational(ast.value));
    case K::variable:
      return Polynomial::q();
    case K::qint:
      return quantum_integer(ast.n, ast.r);
    case K::group:
      return eval_expr(ast.children.at(0));
    case K::neg:
      return -eval_expr(ast.children.at(0));
    case K::pow:
      return rf_pow(eval_expr(ast.children.at(0)), ast.exponent);
    case K::add:
      return eval_expr(ast.children.at(0)) + eval_expr(ast.children.at(1));
    case K::sub:
      return eval_expr(ast.children.at(0)) - eval_expr(ast.children.at(1));
    case K::mul:
      return eval_expr(ast.children.at(0)) * eval_expr(ast.children.at(1));
    case K::div:
      return eval_expr(ast.children.at(0)) / eval_expr(ast.children.at(1));
  }
  throw std::logic_error("eval_expr: unknown node kind");
}

RationalFunction parse_function(std::string_view text) { return eval_expr(parse_expr(text)); }

std::string format_expr(const RationalFunction& f) {
  const std::string num = to_string(f.numerator());
  if (f.is_polynomial()) return num;
  const Polynomial& den = f.denominator();
  // den is monic, so a single term is a bare power of q.
  const std::string d = den.term_count() == 1 ? to_string(den) : "(" + to_string(den) + ")";
  const std::string n = f.numerator().term_count() == 1 ? num : "(" + num + ")";
  return n + "/" + d;
}

}  // namespace qfe
