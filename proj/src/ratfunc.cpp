#include "qfe/ratfunc.hpp"

#include <stdexcept>

namespace qfe {

namespace {

const Polynomial& unit() {
  static const Polynomial one = Polynomial::constant(Rational(1));
  return one;
}

}  // namespace

// Both arguments already coprime; only normalizes the denominator.
RationalFunction make_reduced_unchecked(Polynomial p, Polynomial d) {
  RationalFunction out;
  if (p.is_zero()) return out;
  if (!d.is_monic()) {
    const Rational inv = 1 / Rational(d.leading());
    p = p.scaled(inv);
    d = d.scaled(inv);
  }
  out.num_ = std::move(p);
  out.den_ = std::move(d);
  return out;
}

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(unit()) {}

RationalFunction rf_make(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (p.is_zero()) return {};
  if (d.is_constant() || p.is_constant()) return make_reduced_unchecked(p, d);
  const Polynomial g = poly_gcd(p, d);
  if (g.is_one()) return make_reduced_unchecked(p, d);
  return make_reduced_unchecked(exact_div(p, g), exact_div(d, g));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Inputs are reduced, so only the cross pairs can share factors.
  const Polynomial g1 = poly_gcd(a.numerator(), b.denominator());
  const Polynomial g2 = poly_gcd(b.numerator(), a.denominator());
  Polynomial an = g1.is_one() ? a.numerator() : exact_div(a.numerator(), g1);
  Polynomial bd = g1.is_one() ? b.denominator() : exact_div(b.denominator(), g1);
  Polynomial bn = g2.is_one() ? b.numerator() : exact_div(b.numerator(), g2);
  Polynomial ad = g2.is_one() ? a.denominator() : exact_div(a.denominator(), g2);
  return make_reduced_unchecked(an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero function");
  return a * make_reduced_unchecked(b.denominator(), b.numerator());
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denominator() == b.denominator())
    return rf_make(a.numerator() + b.numerator(), a.denominator());
  return rf_make(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                 a.denominator() * b.denominator());
}

RationalFunction operator-(const RationalFunction& a) {
  return make_reduced_unchecked(-a.numerator(), a.denominator());
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, RfOp op) {
  return op == RfOp::mul ? a * b : a / b;
}

RationalFunction rf_pow(const RationalFunction& a, std::int64_t t) {
  if (t == 0) return RationalFunction::one();
  if (a.is_zero()) {
    if (t < 0) throw std::domain_error("negative power of the zero function");
    return {};
  }
  // Powers of coprime polynomials stay coprime.
  const std::int64_t k = t < 0 ? -t : t;
  Polynomial n = pow(a.numerator(), k);
  Polynomial d = pow(a.denominator(), k);
  if (t < 0) std::swap(n, d);
  return make_reduced_unchecked(std::move(n), std::move(d));
}

RationalFunction rf_compose_power(const RationalFunction& a, std::int64_t m) {
  // Substitution preserves coprimality (apply q -> q^m to a Bezout identity).
  return make_reduced_unchecked(compose_power(a.numerator(), m), compose_power(a.denominator(), m));
}

StandardForm to_standard_form(const RationalFunction& a) {
  if (a.is_zero()) throw std::domain_error("standard form of the zero function");
  StandardForm s;
  const auto num_v = a.numerator().valuation();
  const auto den_v = a.denominator().valuation();
  s.e = num_v - den_v;
  const Polynomial u = a.numerator().without_q_power();
  const Polynomial v = a.denominator().without_q_power();
  s.lambda = u.leading() / v.leading();
  s.u = u.monic();
  s.v = v.monic();
  return s;
}

RationalFunction from_standard_form(const StandardForm& s) {
  Polynomial n = s.u.scaled(s.lambda);
  Polynomial d = s.v;
  if (s.e >= 0)
    n = n.shifted(s.e);
  else
    d = d.shifted(-s.e);
  return make_reduced_unchecked(std::move(n), std::move(d));
}

}  // namespace qfe
