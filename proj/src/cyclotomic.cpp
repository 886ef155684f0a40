#include "qfe/cyclotomic.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "modular.hpp"
#include "qfe/number_theory.hpp"

namespace qfe {

namespace {

class CyclotomicCache {
 public:
  const Polynomial& get(std::int64_t k) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    }
    // Divisors first; recursion must not hold the lock.
    Polynomial phi = f_poly(k);
    for (std::int64_t d : divisors(k))
      if (d < k) phi = exact_div(phi, get(d));
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(k, std::move(phi)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  // node-based: references stay valid across inserts
  std::unordered_map<std::int64_t, Polynomial> cache_;
};

CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

// A prime l = 1 (mod d) and an element of multiplicative order d modulo l.
struct RootOfUnityMod {
  detail::u64 modulus;
  detail::u64 root;
};

RootOfUnityMod find_root_of_unity(std::int64_t d) {
  using detail::u64;
  const u64 ud = static_cast<u64>(d);
  u64 k = ((u64(1) << 62) - 2) / ud;
  while (!detail::is_prime_u64(k * ud + 1)) --k;
  const u64 l = k * ud + 1;
  const auto prime_factors = factorize(d);
  for (u64 a = 2;; ++a) {
    const u64 w = detail::pow_mod(a, k, l);
    bool primitive = true;
    for (auto [s, e] : prime_factors)
      if (detail::pow_mod(w, ud / static_cast<u64>(s), l) == 1) primitive = false;
    if (primitive) return {l, w};
  }
}

const RootOfUnityMod& root_of_unity_mod(std::int64_t d) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::int64_t, RootOfUnityMod> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  const RootOfUnityMod found = find_root_of_unity(d);
  std::unique_lock lock(mutex);
  return cache.try_emplace(d, found).first->second;
}

// False only if Phi_d certainly does not divide p: p(w) != 0 mod l for w of
// order d. Division of p by a monic integer polynomial introduces no new
// denominators, so reduction mod l commutes with the factorization.
bool may_have_factor(const Polynomial& p, std::int64_t d) {
  const auto& [l, w] = root_of_unity_mod(d);
  detail::u64 acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    const auto ci = detail::reduce(c[i], l);
    if (!ci) return true;
    acc = detail::add_mod(detail::mul_mod(acc, w, l), *ci, l);
  }
  return acc == 0;
}

}  // namespace

const Polynomial& cyclotomic(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("cyclotomic: k must be positive");
  return cyclotomic_cache().get(k);
}

Polynomial f_poly(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("f_poly: k must be positive");
  return Polynomial::monomial(Rational(1), k) - Polynomial::constant(Rational(1));
}

Polynomial CycloFactorization::expand() const {
  Polynomial out = residual.scaled(unit).shifted(qpower);
  for (auto [d, m] : factors) out *= pow(cyclotomic(d), m);
  return out;
}

CycloFactorization cyclo_factor(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("cyclo_factor of the zero polynomial");
  CycloFactorization out;
  out.qpower = p.valuation();
  Polynomial rest = p.without_q_power();
  out.unit = rest.leading();
  rest = rest.monic();

  // phi(d) >= sqrt(d/2), so every candidate satisfies d <= 2 deg^2.
  for (std::int64_t d : totient_preimage_upto(rest.degree())) {
    if (rest.degree() == 0) break;
    if (totient(d) > rest.degree() || !may_have_factor(rest, d)) continue;
    const Polynomial& phi = cyclotomic(d);
    while (rest.degree() >= phi.degree()) {
      auto [quot, rem] = poly_divrem(rest, phi);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++out.factors[d];
    }
  }
  out.residual = std::move(rest);
  return out;
}

std::map<std::int64_t, std::int64_t> net_exponents(const FMultisetPair& pair) {
  std::map<std::int64_t, std::int64_t> e;
  for (auto [u, m] : pair.U) e[u] += m;
  for (auto [v, m] : pair.V) e[v] -= m;
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  return e;
}

FMultisetPair from_net_exponents(const std::map<std::int64_t, std::int64_t>& exponents) {
  FMultisetPair out;
  for (auto [k, e] : exponents) {
    if (e > 0) out.U[k] = e;
    if (e < 0) out.V[k] = -e;
  }
  return out;
}

std::variant<FMultisetPair, NonCyclotomic> to_F_pair(const Polynomial& u, const Polynomial& v) {
  for (const Polynomial* p : {&u, &v}) {
    if (!p->is_monic() || p->coeff(0) == 0)
      throw std::invalid_argument("to_F_pair: expects monic polynomials with nonzero constant term");
  }
  // Phi_k = prod_{d | k} F_d^mu(k/d)
  std::map<std::int64_t, std::int64_t> exponents;
  for (int side = 0; side < 2; ++side) {
    const CycloFactorization f = cyclo_factor(side == 0 ? u : v);
    if (!f.ok()) return NonCyclotomic{f.residual, side == 0};
    const std::int64_t sign = side == 0 ? 1 : -1;
    for (auto [k, mult] : f.factors)
      for (std::int64_t d : divisors(k))
        exponents[d] += sign * mult * moebius(k / d);
  }
  std::erase_if(exponents, [](const auto& kv) { return kv.second == 0; });
  return from_net_exponents(exponents);
}

RationalFunction from_F_pair(const FMultisetPair& pair) {
  Polynomial num = Polynomial::constant(Rational(1));
  Polynomial den = Polynomial::constant(Rational(1));
  for (auto [u, m] : pair.U) num *= pow(f_poly(u), m);
  for (auto [v, m] : pair.V) den *= pow(f_poly(v), m);
  return rf_make(num, den);
}

FMultisetPair dilate_F_pair(const FMultisetPair& pair, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("dilate_F_pair: d must be positive");
  FMultisetPair out;
  for (auto [u, m] : pair.U) out.U[u * d] = m;
  for (auto [v, m] : pair.V) out.V[v * d] = m;
  return out;
}

std::int64_t max_F(const FMultisetPair& pair) {
  std::int64_t m = 0;
  if (!pair.U.empty()) m = std::max(m, pair.U.rbegin()->first);
  if (!pair.V.empty()) m = std::max(m, pair.V.rbegin()->first);
  return m;
}

FMultisetPair multiply_F_pairs(const FMultisetPair& a, const FMultisetPair& b) {
  auto e = net_exponents(a);
  for (auto [k, x] : net_exponents(b)) e[k] += x;
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  return from_net_exponents(e);
}

}  // namespace qfe
