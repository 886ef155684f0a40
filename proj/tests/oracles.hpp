// Independent reference computations for the tests. Nothing here calls the
// library's arithmetic beyond constructing and reading Polynomial values.
#ifndef QFE_TESTS_ORACLES_HPP
#define QFE_TESTS_ORACLES_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qfe/polynomial.hpp"

namespace oracle {

using qfe::Rational;
using Coeffs = std::vector<Rational>;  // index = power, may carry trailing zeros

inline Coeffs trimmed(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline Coeffs of(const qfe::Polynomial& p) { return p.coeffs(); }
inline qfe::Polynomial to_poly(const Coeffs& c) { return qfe::Polynomial(c); }

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trimmed(out);
}

inline Coeffs sub(Coeffs a, const Coeffs& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trimmed(a);
}

// Schoolbook long division; returns {quotient, remainder}.
inline std::pair<Coeffs, Coeffs> divide(Coeffs a, Coeffs b) {
  a = trimmed(a);
  b = trimmed(b);
  if (a.size() < b.size()) return {{}, a};
  Coeffs q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = trimmed(a);
  }
  return {trimmed(q), a};
}

inline Coeffs monic(Coeffs a) {
  a = trimmed(a);
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

// Plain Euclid over Q.
inline Coeffs euclid_gcd(Coeffs a, Coeffs b) {
  a = trimmed(a);
  b = trimmed(b);
  while (!b.empty()) {
    Coeffs r = divide(a, b).second;
    a = b;
    b = r;
  }
  return monic(a);
}

inline Coeffs x_power_minus_one(std::int64_t k) {
  Coeffs c(static_cast<std::size_t>(k) + 1);
  c[0] = -1;
  c.back() = 1;
  return c;
}

inline int brute_moebius(std::int64_t k) {
  int mu = 1;
  for (std::int64_t p = 2; p <= k; ++p) {
    if (k % p) continue;
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    if ((k / p) % p == 0) return 0;
    mu = -mu;
  }
  return mu;
}

inline std::int64_t brute_totient(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
  return c;
}

// Phi_k = prod_{d | k} (q^d - 1)^{mu(k/d)}: multiply the positive factors,
// then divide by the negative ones.
inline Coeffs moebius_cyclotomic(std::int64_t k) {
  Coeffs num{Rational(1)}, den{Rational(1)};
  for (std::int64_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int mu = brute_moebius(k / d);
    if (mu == 1) num = mul(num, x_power_minus_one(d));
    if (mu == -1) den = mul(den, x_power_minus_one(d));
  }
  auto [q, r] = divide(num, den);
  return q;
}

inline Rational eval(const Coeffs& c, const Rational& x) {
  Rational acc = 0, power = 1;
  for (const auto& ci : c) {
    acc += ci * power;
    power *= x;
  }
  return acc;
}

inline Rational qint_at(std::int64_t n, std::int64_t r, const Rational& x) {
  Rational acc = 0, step = 1, base = 1;
  for (std::int64_t i = 0; i < r; ++i) step *= x;
  for (std::int64_t i = 0; i < n; ++i) {
    acc += base;
    base *= step;
  }
  return acc;
}

inline Rational power(const Rational& x, std::int64_t e) {
  Rational out = 1;
  const std::int64_t k = e < 0 ? -e : e;
  for (std::int64_t i = 0; i < k; ++i) out *= x;
  return e < 0 ? 1 / out : out;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline qfe::Rational small_rational(Rng& rng, bool nonzero = false) {
  for (;;) {
    qfe::Rational r(static_cast<long>(uniform(rng, -9, 9)), static_cast<unsigned long>(uniform(rng, 1, 4)));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

inline qfe::Polynomial polynomial(Rng& rng, int max_degree, bool nonzero = false) {
  for (;;) {
    std::vector<qfe::Rational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree)) + 1);
    for (auto& x : c) x = uniform(rng, 0, 2) == 0 ? qfe::Rational(0) : small_rational(rng);
    qfe::Polynomial p(c);
    if (!nonzero || !p.is_zero()) return p;
  }
}

}  // namespace gen

#endif  // QFE_TESTS_ORACLES_HPP
