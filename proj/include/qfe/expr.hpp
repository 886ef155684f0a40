#ifndef QFE_EXPR_HPP
#define QFE_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfe/ratfunc.hpp"

namespace qfe {

// Syntax tree for expressions in q such as "qint(5,3)/qint(5,1)".
//
// Grammar (precedence low to high; '^' binds tighter than unary minus):
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := primary ('^' exponent)?
//   exponent := INT ('^' exponent)? | '(' '-'? INT ')' ('^' exponent)?
//   primary  := INT | 'q' | 'qint' '(' INT (',' INT)? ')' | '(' expr ')'
struct Expr {
  enum class Kind { literal, variable, qint, add, sub, mul, div, pow, neg, group };

  Kind kind = Kind::literal;
  Integer value;               // literal
  std::int64_t n = 0, r = 1;   // qint
  std::int64_t exponent = 0;   // pow
  std::vector<Expr> children;  // operands, left to right
  std::size_t offset = 0;      // byte offset of the node in the source
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Largest |exponent| and qint degree the parser accepts.
inline constexpr std::int64_t kMaxExponent = 1'000'000;

Expr parse_expr(std::string_view text);

// Throws std::domain_error on division by the zero function.
RationalFunction eval_expr(const Expr& ast);

// parse + eval
RationalFunction parse_function(std::string_view text);

// "q^2 - q + 1", "1/(q + 1)", "0"; round-trips through parse_function.
std::string format_expr(const RationalFunction& f);

}  // namespace qfe

#endif  // QFE_EXPR_HPP
