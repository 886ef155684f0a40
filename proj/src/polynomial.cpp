#include "qfe/polynomial.hpp"

#include <stdexcept>

#include "modular.hpp"

namespace qfe {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, Degree k) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(Degree i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial::Degree Polynomial::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<Degree>(i);
  return kZeroDegree;
}

std::size_t Polynomial::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(1 / Rational(leading()));
}

Polynomial Polynomial::without_q_power() const {
  const Degree v = valuation();
  if (v <= 0) return *this;
  return Polynomial(std::vector<Rational>(coeffs_.begin() + v, coeffs_.end()));
}

Polynomial Polynomial::shifted(Degree k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  Polynomial out;
  out.coeffs_ = std::move(v);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial out(*this);
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& b) { return *this = *this * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Substituted factors such as p(q^m) are mostly zeros; only walk the
  // nonzero terms of each side.
  std::vector<std::size_t> nz_a, nz_b;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != 0) nz_a.push_back(i);
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
    if (b.coeffs_[j] != 0) nz_b.push_back(j);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational t;
  for (std::size_t i : nz_a) {
    for (std::size_t j : nz_b) {
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw std::invalid_argument("poly_arith: unknown op");
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial{}, a};

  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / Rational(b.leading());
  std::vector<std::size_t> nz_b;
  for (std::size_t i = 0; i < db; ++i)
    if (bc[i] != 0) nz_b.push_back(i);

  Rational t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational& top = rem[k + db];
    if (top == 0) continue;
    Rational c = top * inv_lead;
    for (std::size_t i : nz_b) {
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), bc[i].get_mpq_t());
      rem[k + i] -= t;
    }
    top = 0;
    quot[k] = std::move(c);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: divisor does not divide");
  return q;
}

PrimitiveSplit primitive_split(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("primitive_split of the zero polynomial");
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs())
    if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    ints.push_back(c.get_num() * (den_lcm / c.get_den()));
    content = gcd(content, ints.back());
  }
  if (ints.back() < 0) content = -content;
  for (auto& c : ints) c /= content;
  Rational scale(content, den_lcm);
  scale.canonicalize();
  return {scale, std::move(ints)};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(Rational(1));
  const auto g = detail::gcd_integer(primitive_split(a).integer_part, primitive_split(b).integer_part);
  std::vector<Rational> coeffs;
  coeffs.reserve(g.size());
  for (const auto& c : g) coeffs.emplace_back(c);
  return Polynomial(std::move(coeffs)).monic();
}

Polynomial compose_power(const Polynomial& p, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("compose_power: m must be positive");
  if (m == 1 || p.is_constant()) return p;
  const auto& c = p.coeffs();
  std::vector<Rational> out((c.size() - 1) * static_cast<std::size_t>(m) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(m)] = c[i];
  return Polynomial(std::move(out));
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Polynomial quantum_integer(std::int64_t n, std::int64_t r) {
  if (n < 1 || r < 1) throw std::invalid_argument("quantum_integer: n and r must be positive");
  std::vector<Rational> out(static_cast<std::size_t>(r * (n - 1) + 1));
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(r * i)] = 1;
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& p, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("polynomial pow: negative exponent");
  Polynomial result = Polynomial::constant(Rational(1));
  Polynomial base = p;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational magnitude = abs(c[k]);
    if (k == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace qfe
