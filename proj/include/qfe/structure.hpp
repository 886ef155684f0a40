#ifndef QFE_STRUCTURE_HPP
#define QFE_STRUCTURE_HPP

#include <cstdint>
#include <map>

#include "qfe/errors.hpp"
#include "qfe/solutions.hpp"

namespace qfe {

// Classification data of a rational solution with support S(P), |P| >= 2:
//   f_n(q) = lambda(n) q^{t0 (n-1)} prod_{r in R} [n]_{q^r}^{t_r}
// lambda is completely multiplicative and stored on P only; `terms` maps r
// to t_r and never holds a zero exponent.
struct StructureData {
  PrimeList primes;
  std::map<std::int64_t, Rational> lambda;
  Rational t0;
  std::map<std::int64_t, std::int64_t> terms;

  friend bool operator==(const StructureData&, const StructureData&) = default;
};

// Throws std::invalid_argument describing the first broken invariant.
void validate_structure(const StructureData& sd);

// t0 (n-1) is an integer for every n in S(P), i.e. den(t0) | p-1 for all p.
bool validate_t0(const PrimeList& primes, const Rational& t0);

// lambda(n) for n in S(P); std::invalid_argument otherwise.
Rational lambda_extend(const StructureData& sd, std::int64_t n);

// 0 for n outside S(P).
RationalFunction closed_form(const StructureData& sd, std::int64_t n);

// Generators h_p = closed_form(sd, p).
SolutionSpec closed_form_spec(const StructureData& sd);

// deg(u_n) - deg(v_n) = (n-1) * sum_r r t_r.
std::int64_t degree_signature(const StructureData& sd, std::int64_t n);

struct DecomposeOptions {
  // Off only to exercise the peeling guards on non-solutions directly.
  bool check_commutativity = true;
};

// Recovers the classification data from the prime generators by peeling one
// [p]_{q^r} per step off the largest F-index. Throws TooFewPrimes or
// NotASolution; never returns data that fails to reproduce the generators.
StructureData decompose(const SolutionSpec& spec, const DecomposeOptions& options = {});

}  // namespace qfe

#endif  // QFE_STRUCTURE_HPP
