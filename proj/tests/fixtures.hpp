#ifndef QFE_TESTS_FIXTURES_HPP
#define QFE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qfe/cyclotomic.hpp"
#include "qfe/expr.hpp"
#include "qfe/solutions.hpp"
#include "qfe/structure.hpp"

namespace fixtures {

// The worked example generators over P = {2, 5, 7}, typed as printed.
inline const char* const kH2 = "1 - q + q^2";
inline const char* const kH5 = "1 - q + q^3 - q^4 + q^5 - q^7 + q^8";
inline const char* const kH7 = "1 - q + q^3 - q^4 + q^6 - q^8 + q^9 - q^11 + q^12";

inline qfe::SolutionSpec example_spec() {
  return qfe::SolutionSpec({2, 5, 7}, {{2, qfe::parse_function(kH2)},
                                       {5, qfe::parse_function(kH5)},
                                       {7, qfe::parse_function(kH7)}});
}

// h_p = [p]_q
inline qfe::SolutionSpec quantum_spec(const qfe::PrimeList& primes) {
  std::map<std::int64_t, qfe::RationalFunction> gens;
  for (auto p : primes) gens.emplace(p, qfe::quantum_integer(p));
  return qfe::SolutionSpec(primes, gens);
}

inline qfe::SolutionSpec spec_of(const qfe::PrimeList& primes, const std::map<std::int64_t, std::string>& exprs) {
  std::map<std::int64_t, qfe::RationalFunction> gens;
  for (const auto& [p, e] : exprs) gens.emplace(p, qfe::parse_function(e));
  return qfe::SolutionSpec(primes, gens);
}


// Random classification data: |P| in {2,3}, primes <= 13, |R| <= 3, r <= 4,
// 1 <= |t_r| <= 3, lambda(p) a random nonzero rational, t0 valid for P.
inline qfe::StructureData random_structure(std::mt19937_64& rng) {
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  static const qfe::PrimeList pool{2, 3, 5, 7, 11, 13};
  qfe::StructureData sd;
  const auto count = uniform(2, 3);
  while (static_cast<std::int64_t>(sd.primes.size()) < count) {
    const auto p = pool[static_cast<std::size_t>(uniform(0, 5))];
    if (std::find(sd.primes.begin(), sd.primes.end(), p) == sd.primes.end()) sd.primes.push_back(p);
  }
  std::sort(sd.primes.begin(), sd.primes.end());
  std::int64_t g = 0;
  for (auto p : sd.primes) {
    g = std::gcd(g, p - 1);
    qfe::Rational l(static_cast<long>(uniform(1, 7)) * (uniform(0, 1) ? 1 : -1),
                    static_cast<unsigned long>(uniform(1, 5)));
    l.canonicalize();
    sd.lambda[p] = l;
  }
  std::vector<std::int64_t> dens;
  for (std::int64_t d = 1; d <= g; ++d)
    if (g % d == 0) dens.push_back(d);
  sd.t0 = qfe::Rational(static_cast<long>(uniform(-3, 3)),
                        static_cast<unsigned long>(dens[static_cast<std::size_t>(uniform(0, dens.size() - 1))]));
  sd.t0.canonicalize();
  const auto terms = uniform(0, 3);
  for (int i = 0; i < terms; ++i) {
    const auto r = uniform(1, 4);
    auto t = uniform(1, 3) * (uniform(0, 1) ? 1 : -1);
    sd.terms[r] = t;
  }
  return sd;
}

// Disjoint F-multisets over indices <= 24, at most five entries.
inline qfe::FMultisetPair random_pair(std::mt19937_64& rng) {
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  qfe::FMultisetPair pair;
  const auto count = uniform(0, 5);
  for (int i = 0; i < count; ++i) {
    const auto k = uniform(1, 24);
    if (pair.U.contains(k) || pair.V.contains(k)) continue;
    (uniform(0, 1) ? pair.U : pair.V)[k] = uniform(1, 3);
  }
  return pair;
}

}  // namespace fixtures

#endif  // QFE_TESTS_FIXTURES_HPP
