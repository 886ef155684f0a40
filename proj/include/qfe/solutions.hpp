#ifndef QFE_SOLUTIONS_HPP
#define QFE_SOLUTIONS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "qfe/errors.hpp"
#include "qfe/ratfunc.hpp"

namespace qfe {

using PrimeList = std::vector<std::int64_t>;

struct CommutativityReport {
  bool commutes = true;
  // Violating pairs (p1, p2) with p1 < p2.
  std::vector<std::pair<std::int64_t, std::int64_t>> violations;
};

// A candidate solution given by its prime generators h_p. The support of the
// induced sequence is the semigroup S(P) generated by the primes.
//
// Immutable. Copies share a cache holding the commutativity verdict and the
// synthesized f_n; the cache is safe to use from several threads.
class SolutionSpec {
 public:
  // primes strictly increasing, all prime; one nonzero generator per prime.
  // Throws std::invalid_argument otherwise.
  SolutionSpec(PrimeList primes, std::map<std::int64_t, RationalFunction> generators);

  const PrimeList& primes() const { return primes_; }
  const std::map<std::int64_t, RationalFunction>& generators() const { return generators_; }
  const RationalFunction& generator(std::int64_t p) const;

 private:
  friend CommutativityReport check_commutativity(const SolutionSpec& spec);
  friend RationalFunction synthesize(const SolutionSpec& spec, std::int64_t n);
  struct Cache;

  PrimeList primes_;
  std::map<std::int64_t, RationalFunction> generators_;
  std::shared_ptr<Cache> cache_;
};

// n is a product of primes from P (1 always is).
bool support_membership(const PrimeList& primes, std::int64_t n);

// Checks h_p1(q) h_p2(q^p1) = h_p2(q) h_p1(q^p2) for every pair p1 < p2.
CommutativityReport check_commutativity(const SolutionSpec& spec);

// f_n of the unique solution extending the generators: 0 off the support,
// 1 at n = 1. Throws NotASolution(commutativity) when the generators do not
// commute. Memoized per spec.
RationalFunction synthesize(const SolutionSpec& spec, std::int64_t n);

// Folds the factorization of n in increasing prime order without checking
// commutativity. Agrees with synthesize() on commuting specs.
RationalFunction synthesize_unchecked(const SolutionSpec& spec, std::int64_t n);

// Folds using the prime powers of n visited in `order` (a permutation of the
// distinct primes dividing n).
RationalFunction synthesize_ordered(const SolutionSpec& spec, std::int64_t n,
                                    std::span<const std::int64_t> order);

// f_{p^k} = prod_{i<k} h_p(q^{p^i}).
RationalFunction prime_power_value(const RationalFunction& h_p, std::int64_t p, int k);

// f_mn = f_m(q) f_n(q^m) and f_m(q) f_n(q^m) = f_n(q) f_m(q^n).
bool verify_fe(const SolutionSpec& spec, std::int64_t m, std::int64_t n);

// h_p = f_p(q^r)^d * g_p(q^s)^e. Requires identical prime sets.
SolutionSpec combine_solutions(const SolutionSpec& f, const SolutionSpec& g, std::int64_t r,
                               std::int64_t s, std::int64_t d, std::int64_t e);
// h_p = 1 / f_p.
SolutionSpec invert_solution(const SolutionSpec& f);

}  // namespace qfe

#endif  // QFE_SOLUTIONS_HPP
