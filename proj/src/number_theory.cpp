#include "qfe/number_theory.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qfe {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t count = out.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("moebius: k must be positive");
  int mu = 1;
  for (auto [p, e] : factorize(k)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::int64_t> totient_preimage_upto(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 1) return out;
  // phi(p^k) >= p - 1, so only primes p <= bound + 1 can appear.
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= bound + 1; ++p)
    if (is_prime(p)) primes.push_back(p);

  std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
      [&](std::size_t from, std::int64_t d, std::int64_t phi) {
        out.push_back(d);
        for (std::size_t i = from; i < primes.size(); ++i) {
          const std::int64_t p = primes[i];
          std::int64_t next_phi = phi * (p - 1);
          if (next_phi > bound) break;
          std::int64_t next_d = d * p;
          while (next_phi <= bound) {
            walk(i + 1, next_d, next_phi);
            next_d *= p;
            next_phi *= p;
          }
        }
      };
  walk(0, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace qfe
