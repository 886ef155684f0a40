#ifndef QFE_SRC_MODULAR_HPP
#define QFE_SRC_MODULAR_HPP

// Word-size modular arithmetic used by the gcd and the cyclotomic screen.
// Moduli are primes below 2^62 so that products fit in unsigned __int128.

#include <cstdint>
#include <optional>
#include <vector>

#include "qfe/rational.hpp"

namespace qfe::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }
inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

u64 pow_mod(u64 base, u64 exp, u64 m);
u64 inv_mod(u64 a, u64 m);  // m prime, a != 0 mod m
bool is_prime_u64(u64 n);

// Descending primes below 2^62, generated lazily and shared.
u64 nth_large_prime(std::size_t i);

// Reduces an integer modulo m into [0, m).
u64 reduce(const Integer& x, u64 m);
// Reduces a rational; nullopt if m divides the denominator.
std::optional<u64> reduce(const Rational& x, u64 m);

using ModPoly = std::vector<u64>;  // index = power, trimmed

void trim(ModPoly& p);
// Monic gcd over GF(m).
ModPoly gcd_mod(ModPoly a, ModPoly b, u64 m);

// Primitive gcd of two nonzero primitive integer polynomials.
std::vector<Integer> gcd_integer(const std::vector<Integer>& a, const std::vector<Integer>& b);

}  // namespace qfe::detail

#endif  // QFE_SRC_MODULAR_HPP
