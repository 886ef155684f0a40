#ifndef QFE_RATFUNC_HPP
#define QFE_RATFUNC_HPP

#include <cstdint>

#include "qfe/polynomial.hpp"

namespace qfe {

// Reduced quotient of polynomials. The denominator is monic and coprime to
// the numerator, so two equal functions have identical representations.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}  // zero
  RationalFunction(Polynomial p);  // NOLINT: polynomials embed implicitly
  static RationalFunction constant(const Rational& c) { return Polynomial::constant(c); }
  static RationalFunction one() { return constant(Rational(1)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  friend RationalFunction rf_make(const Polynomial& p, const Polynomial& d);
  friend RationalFunction make_reduced_unchecked(Polynomial p, Polynomial d);
  Polynomial num_;
  Polynomial den_;
};

// p/d in lowest terms; throws std::domain_error for d = 0.
RationalFunction rf_make(const Polynomial& p, const Polynomial& d);

enum class RfOp { mul, div };

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op);
RationalFunction rf_pow(const RationalFunction& a, std::int64_t t);
RationalFunction rf_compose_power(const RationalFunction& a, std::int64_t m);

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a);

// lambda * q^e * u / v with u, v monic, nonzero constant terms, coprime.
struct StandardForm {
  Rational lambda;
  std::int64_t e = 0;
  Polynomial u;
  Polynomial v;

  // deg(u) - deg(v)
  std::int64_t degree_difference() const { return u.degree() - v.degree(); }
  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

// Throws std::domain_error for the zero function.
StandardForm to_standard_form(const RationalFunction& a);
RationalFunction from_standard_form(const StandardForm& s);

}  // namespace qfe

#endif  // QFE_RATFUNC_HPP
