#ifndef QFE_NUMBER_THEORY_HPP
#define QFE_NUMBER_THEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace qfe {

// Prime power factorization, primes ascending.
using Factorization = std::vector<std::pair<std::int64_t, int>>;

bool is_prime(std::int64_t n);
Factorization factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t totient(std::int64_t n);
int moebius(std::int64_t k);

// All d >= 1 with totient(d) <= bound, ascending.
std::vector<std::int64_t> totient_preimage_upto(std::int64_t bound);

std::int64_t ipow(std::int64_t base, int exp);

}  // namespace qfe

#endif  // QFE_NUMBER_THEORY_HPP
