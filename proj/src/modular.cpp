#include "modular.hpp"

#include <mutex>
#include <stdexcept>

namespace qfe::detail {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) { return pow_mod(a, m - 2, m); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 nth_large_prime(std::size_t i) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  u64 candidate = primes.empty() ? (u64(1) << 62) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[i];
}

u64 reduce(const Integer& x, u64 m) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m));
}

std::optional<u64> reduce(const Rational& x, u64 m) {
  const u64 den = reduce(x.get_den(), m);
  if (den == 0) return std::nullopt;
  return mul_mod(reduce(x.get_num(), m), inv_mod(den, m), m);
}

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

namespace {

void make_monic(ModPoly& p, u64 m) {
  if (p.empty() || p.back() == 1) return;
  const u64 inv = inv_mod(p.back(), m);
  for (auto& c : p) c = mul_mod(c, inv, m);
}

// a <- a mod b, b monic.
void rem_monic(ModPoly& a, const ModPoly& b, u64 m) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const u64 lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i < db; ++i)
        a[shift + i] = sub_mod(a[shift + i], mul_mod(lead, b[i], m), m);
    }
    a.pop_back();
    trim(a);
  }
}

std::vector<Integer> to_symmetric(const std::vector<Integer>& residues, const Integer& modulus) {
  std::vector<Integer> out(residues);
  const Integer half = modulus / 2;
  for (auto& c : out)
    if (c > half) c -= modulus;
  return out;
}

std::vector<Integer> primitive_part(std::vector<Integer> p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

bool divides_integer(const std::vector<Integer>& divisor, std::vector<Integer> a) {
  const std::size_t dd = divisor.size() - 1;
  const Integer& lead = divisor.back();
  Integer q;
  while (a.size() >= divisor.size()) {
    if (a.back() != 0) {
      if (!mpz_divisible_p(a.back().get_mpz_t(), lead.get_mpz_t())) return false;
      q = a.back() / lead;
      const std::size_t shift = a.size() - 1 - dd;
      for (std::size_t i = 0; i < dd; ++i)
        if (divisor[i] != 0) a[shift + i] -= q * divisor[i];
    }
    a.pop_back();
  }
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

}  // namespace

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 m) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    make_monic(b, m);
    rem_monic(a, b, m);
    std::swap(a, b);
  }
  make_monic(a, m);
  return a;
}

std::vector<Integer> gcd_integer(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.size() == 1 || b.size() == 1) return {Integer(1)};
  const Integer lead_gcd = gcd(a.back(), b.back());

  std::vector<Integer> acc;  // CRT image in [0, modulus)
  std::vector<Integer> last_symmetric;
  Integer modulus = 1;
  std::size_t acc_degree = 0;
  bool have = false;

  for (std::size_t i = 0;; ++i) {
    const u64 m = nth_large_prime(i);
    if (reduce(a.back(), m) == 0 || reduce(b.back(), m) == 0) continue;
    ModPoly am(a.size()), bm(b.size());
    for (std::size_t j = 0; j < a.size(); ++j) am[j] = reduce(a[j], m);
    for (std::size_t j = 0; j < b.size(); ++j) bm[j] = reduce(b[j], m);
    ModPoly g = gcd_mod(std::move(am), std::move(bm), m);
    if (g.size() == 1) return {Integer(1)};
    const u64 scale = reduce(lead_gcd, m);
    for (auto& c : g) c = mul_mod(c, scale, m);
    const std::size_t degree = g.size() - 1;

    if (!have || degree < acc_degree) {
      acc.assign(g.size(), Integer(0));
      for (std::size_t j = 0; j < g.size(); ++j) acc[j] = Integer(static_cast<unsigned long>(g[j]));
      modulus = Integer(static_cast<unsigned long>(m));
      acc_degree = degree;
      have = true;
      last_symmetric.clear();
    } else if (degree > acc_degree) {
      continue;  // unlucky prime
    } else {
      const Integer mz(static_cast<unsigned long>(m));
      const u64 inv = inv_mod(reduce(modulus, m), m);
      for (std::size_t j = 0; j < acc.size(); ++j) {
        const u64 diff = sub_mod(g[j], reduce(acc[j], m), m);
        const u64 t = mul_mod(diff, inv, m);
        acc[j] += modulus * Integer(static_cast<unsigned long>(t));
      }
      modulus *= mz;
    }

    auto candidate = to_symmetric(acc, modulus);
    if (candidate == last_symmetric) {
      auto pp = primitive_part(candidate);
      if (divides_integer(pp, a) && divides_integer(pp, b)) return pp;
    }
    last_symmetric = std::move(candidate);
  }
}

}  // namespace qfe::detail
