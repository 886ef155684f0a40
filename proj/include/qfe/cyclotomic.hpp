#ifndef QFE_CYCLOTOMIC_HPP
#define QFE_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <variant>

#include "qfe/polynomial.hpp"
#include "qfe/ratfunc.hpp"

namespace qfe {

// Multiset of positive integers: element -> multiplicity (always >= 1).
using Multiset = std::map<std::int64_t, std::int64_t>;

// Phi_k, memoized. Thread-safe.
const Polynomial& cyclotomic(std::int64_t k);

// F_k = q^k - 1.
Polynomial f_poly(std::int64_t k);

// p = unit * q^qpower * prod_d Phi_d^factors[d] * residual, residual monic.
// The factorization is complete (p has only 0 and roots of unity as zeros)
// exactly when residual == 1.
struct CycloFactorization {
  Rational unit;
  std::int64_t qpower = 0;
  Multiset factors;
  Polynomial residual;

  bool ok() const { return residual.is_one(); }
  Polynomial expand() const;
};

// Throws std::domain_error for p = 0.
CycloFactorization cyclo_factor(const Polynomial& p);

// Disjoint multisets U, V representing prod_{u in U} F_u / prod_{v in V} F_v.
struct FMultisetPair {
  Multiset U;
  Multiset V;

  bool empty() const { return U.empty() && V.empty(); }
  friend bool operator==(const FMultisetPair&, const FMultisetPair&) = default;
};

// Residual non-cyclotomic factor of u (in_numerator) or of v.
struct NonCyclotomic {
  Polynomial residual;
  bool in_numerator = true;
};

// Requires u, v monic with nonzero constant terms (std::invalid_argument).
std::variant<FMultisetPair, NonCyclotomic> to_F_pair(const Polynomial& u, const Polynomial& v);

RationalFunction from_F_pair(const FMultisetPair& pair);
FMultisetPair dilate_F_pair(const FMultisetPair& pair, std::int64_t d);
// Largest element of U or V; 0 when both are empty.
std::int64_t max_F(const FMultisetPair& pair);

// Product of the represented functions, with U/V cancelled to disjointness.
FMultisetPair multiply_F_pairs(const FMultisetPair& a, const FMultisetPair& b);

// Net exponent of every F_d: positive entries come from U, negative from V.
std::map<std::int64_t, std::int64_t> net_exponents(const FMultisetPair& pair);
FMultisetPair from_net_exponents(const std::map<std::int64_t, std::int64_t>& exponents);

}  // namespace qfe

#endif  // QFE_CYCLOTOMIC_HPP
