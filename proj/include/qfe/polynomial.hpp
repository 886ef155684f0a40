#ifndef QFE_POLYNOMIAL_HPP
#define QFE_POLYNOMIAL_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qfe/rational.hpp"

namespace qfe {

// Dense univariate polynomial in q over the rationals.
// coeffs()[i] is the coefficient of q^i; the leading coefficient is never
// zero and the zero polynomial has no coefficients.
class Polynomial {
 public:
  using Degree = std::int64_t;
  // degree() of the zero polynomial; compares below every real degree.
  static constexpr Degree kZeroDegree = std::numeric_limits<Degree>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, Degree k);
  static Polynomial q() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Degree degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<Degree>(coeffs_.size()) - 1;
  }
  // Coefficient of q^i, zero outside the stored range.
  Rational coeff(Degree i) const;
  const Rational& leading() const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  // Exponent of the lowest nonzero term; kZeroDegree for zero.
  Degree valuation() const;
  std::size_t term_count() const;

  Polynomial monic() const;
  // Drops the factor q^valuation().
  Polynomial without_q_power() const;
  Polynomial shifted(Degree k) const;  // times q^k, k >= 0
  Polynomial scaled(const Rational& c) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

// (quotient, remainder) with a = b*quotient + remainder and
// degree(remainder) < degree(b). Throws std::domain_error for b = 0.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b);

// a / b where b is known to divide a; throws std::domain_error otherwise.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// Monic gcd. gcd(0, 0) throws std::domain_error.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// p(q^m) for m >= 1.
Polynomial compose_power(const Polynomial& p, std::int64_t m);

Rational poly_eval(const Polynomial& p, const Rational& x);

// [n]_{q^r} = 1 + q^r + ... + q^{r(n-1)}.
Polynomial quantum_integer(std::int64_t n, std::int64_t r = 1);

Polynomial pow(const Polynomial& p, std::int64_t k);

// Descending powers, e.g. "q^2 - 3/2*q + 1"; "0" for zero.
std::string to_string(const Polynomial& p);

// Splits p into an integer polynomial and a positive rational scale with
// p = scale * integer_part, integer_part primitive with positive leading term.
struct PrimitiveSplit {
  Rational scale;
  std::vector<Integer> integer_part;
};
PrimitiveSplit primitive_split(const Polynomial& p);

}  // namespace qfe

#endif  // QFE_POLYNOMIAL_HPP
