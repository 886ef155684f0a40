#include <doctest.h>

#include "oracles.hpp"
#include "qfe/expr.hpp"

using qfe::parse_function;
using qfe::Polynomial;
using qfe::Rational;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    qfe::parse_expr(text);
  } catch (const qfe::ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for '" << text << "'");
  return 0;
}

std::string message_of(std::string_view text) {
  try {
    parse_function(text);
  } catch (const qfe::ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse and evaluate") {
  CHECK(parse_function("qint(5,3)/qint(5,1)").numerator() ==
        parse_function("1 - q + q^3 - q^4 + q^5 - q^7 + q^8").numerator());
  CHECK(parse_function("qint(5,3)/qint(5,1)").is_polynomial());
  CHECK(parse_function("qint(4)") == parse_function("1 + q + q^2 + q^3"));
  CHECK(parse_function("qint(3, 2)") == parse_function("1 + q^2 + q^4"));
  CHECK(parse_function("q^2^3") == parse_function("q^8"));
  CHECK(parse_function("-q^2") == -parse_function("q^2"));
  CHECK(parse_function("(-q)^2") == parse_function("q^2"));
  CHECK(parse_function("q^(-2)") == qfe::rf_make(Polynomial::constant(Rational(1)), Polynomial::monomial(Rational(1), 2)));
  CHECK(parse_function("(q + 1)^0") == qfe::RationalFunction::one());
  CHECK(parse_function("3/2*q + 1/2") == qfe::RationalFunction(Polynomial({Rational(1, 2), Rational(3, 2)})));
  CHECK(parse_function("  q\t+ 1 ") == parse_function("q+1"));
  CHECK(parse_function("(q^2 - 1)/(q - 1)") == parse_function("q + 1"));
  CHECK(parse_function("0").is_zero());

  const auto ast = qfe::parse_expr("qint(7, 2) * q");
  CHECK(ast.kind == qfe::Expr::Kind::mul);
  REQUIRE(ast.children.size() == 2);
  CHECK(ast.children[0].kind == qfe::Expr::Kind::qint);
  CHECK(ast.children[0].n == 7);
  CHECK(ast.children[0].r == 2);
  CHECK(ast.children[1].offset == 13);
}

TEST_CASE("parse errors carry offsets") {
  CHECK(error_offset("") == 0);
  CHECK(error_offset("foo") == 0);
  CHECK(error_offset("1/0") == 2);
  CHECK(error_offset("q^(1/2)") == 4);
  CHECK(error_offset("q^-1") == 2);
  CHECK(error_offset("qint(0)") == 5);
  CHECK(error_offset("2*q+") == 4);
  CHECK(error_offset("(q+1") == 4);
  CHECK(error_offset("q + 1)") == 5);
  CHECK(error_offset("1 + + q") == 4);
  CHECK(error_offset("q^1000001") == 1);
  CHECK(message_of("q^(1/2)").find("non-integer exponent") != std::string::npos);
  CHECK(message_of("1/0").find("zero denominator literal") != std::string::npos);
  CHECK_THROWS_AS(parse_function("1/(q - q)"), std::domain_error);
  CHECK_THROWS_AS(parse_function("(q - q)^(-1)"), std::domain_error);
}

TEST_CASE("format examples") {
  CHECK(qfe::format_expr(parse_function("qint(3,2)")) == "q^4 + q^2 + 1");
  CHECK(qfe::format_expr(parse_function("1/(1+q)")) == "1/(q + 1)");
  CHECK(qfe::format_expr(parse_function("(q+1)/q^2")) == "(q + 1)/q^2");
  CHECK(qfe::format_expr(parse_function("-3/(2*q)")) == "-3/2/q");
  CHECK(qfe::format_expr(parse_function("0")) == "0");
  CHECK(qfe::format_expr(parse_function("1/2*q + 3/2")) == "1/2*q + 3/2");
}

TEST_CASE("format then parse is the identity") {
  gen::Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial num = gen::polynomial(rng, 6);
    Polynomial den = gen::polynomial(rng, 4);
    if (den.is_zero()) den = Polynomial::constant(Rational(1));
    const auto f = qfe::rf_make(num, den);
    const auto text = qfe::format_expr(f);
    CHECK_MESSAGE(parse_function(text) == f, text);
  }
}
