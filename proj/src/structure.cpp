#include "qfe/structure.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "qfe/cyclotomic.hpp"
#include "qfe/number_theory.hpp"

namespace qfe {

bool validate_t0(const PrimeList& primes, const Rational& t0) {
  for (std::int64_t p : primes)
    if (Integer(static_cast<long>(p - 1)) % t0.get_den() != 0) return false;
  return true;
}

void validate_structure(const StructureData& sd) {
  if (sd.primes.size() < 2) throw std::invalid_argument("structure data needs at least two primes");
  for (std::size_t i = 0; i < sd.primes.size(); ++i) {
    if (!is_prime(sd.primes[i]))
      throw std::invalid_argument("not a prime: " + std::to_string(sd.primes[i]));
    if (i > 0 && sd.primes[i] <= sd.primes[i - 1])
      throw std::invalid_argument("primes must be strictly increasing");
  }
  if (sd.lambda.size() != sd.primes.size())
    throw std::invalid_argument("lambda must be given exactly on the primes");
  for (std::int64_t p : sd.primes) {
    auto it = sd.lambda.find(p);
    if (it == sd.lambda.end()) throw std::invalid_argument("lambda missing for prime " + std::to_string(p));
    if (it->second == 0) throw std::invalid_argument("lambda(" + std::to_string(p) + ") is zero");
  }
  if (!validate_t0(sd.primes, sd.t0))
    throw std::invalid_argument("t0 = " + to_string(sd.t0) + " does not make t0 (n-1) integral on S(P)");
  for (auto [r, t] : sd.terms) {
    if (r < 1) throw std::invalid_argument("term index r must be positive");
    if (t == 0) throw std::invalid_argument("zero exponent for r = " + std::to_string(r));
  }
}

Rational lambda_extend(const StructureData& sd, std::int64_t n) {
  if (!support_membership(sd.primes, n))
    throw std::invalid_argument(std::to_string(n) + " is outside the support S(P)");
  Rational out = 1;
  for (auto [p, a] : factorize(n))
    for (int i = 0; i < a; ++i) out *= sd.lambda.at(p);
  return out;
}

RationalFunction closed_form(const StructureData& sd, std::int64_t n) {
  validate_structure(sd);
  if (!support_membership(sd.primes, n)) return {};
  Polynomial num = Polynomial::constant(lambda_extend(sd, n));
  Polynomial den = Polynomial::constant(Rational(1));
  for (auto [r, t] : sd.terms) {
    const Polynomial f = pow(quantum_integer(n, r), t > 0 ? t : -t);
    (t > 0 ? num : den) *= f;
  }
  const Rational e = sd.t0 * (n - 1);
  const std::int64_t shift = e.get_num().get_si();
  if (shift >= 0)
    num = num.shifted(shift);
  else
    den = den.shifted(-shift);
  return rf_make(num, den);
}

SolutionSpec closed_form_spec(const StructureData& sd) {
  std::map<std::int64_t, RationalFunction> gens;
  for (std::int64_t p : sd.primes) gens.emplace(p, closed_form(sd, p));
  return SolutionSpec(sd.primes, std::move(gens));
}

std::int64_t degree_signature(const StructureData& sd, std::int64_t n) {
  if (!support_membership(sd.primes, n))
    throw std::invalid_argument(std::to_string(n) + " is outside the support S(P)");
  std::int64_t t1 = 0;
  for (auto [r, t] : sd.terms) t1 += r * t;
  return (n - 1) * t1;
}

namespace {

std::int64_t weight(const FMultisetPair& pair) {
  std::int64_t w = 0;
  for (auto [k, m] : pair.U) w += k * m;
  for (auto [k, m] : pair.V) w += k * m;
  return w;
}

void decrement(Multiset& m, std::int64_t key) {
  auto it = m.find(key);
  if (--it->second == 0) m.erase(it);
}

// Divides (numerator side) or multiplies (denominator side) the represented
// function by [p]_{q^r} = F_{rp} / F_r.
void peel(FMultisetPair& pair, std::int64_t r, std::int64_t p, bool numerator_side) {
  Multiset& same = numerator_side ? pair.U : pair.V;
  Multiset& other = numerator_side ? pair.V : pair.U;
  decrement(same, r * p);
  if (other.contains(r))
    decrement(other, r);
  else
    ++same[r];
}

std::string pair_name(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

StructureData decompose(const SolutionSpec& spec, const DecomposeOptions& options) {
  const PrimeList& primes = spec.primes();
  if (primes.size() < 2) throw TooFewPrimes(primes.size());

  StructureData sd;
  sd.primes = primes;

  std::vector<StandardForm> forms;
  for (std::int64_t p : primes) {
    forms.push_back(to_standard_form(spec.generator(p)));
    sd.lambda[p] = forms.back().lambda;
    Rational t0(forms.back().e, p - 1);
    t0.canonicalize();
    if (forms.size() == 1) {
      sd.t0 = t0;
    } else if (t0 != sd.t0) {
      throw NotASolution(Failure::inconsistent_t0,
                         "primes " + pair_name(primes.front(), p) + " give t0 = " + to_string(sd.t0) +
                             " and " + to_string(t0));
    }
  }

  std::vector<FMultisetPair> pairs;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto converted = to_F_pair(forms[i].u, forms[i].v);
    if (auto* bad = std::get_if<NonCyclotomic>(&converted)) {
      throw NotASolution(Failure::non_cyclotomic,
                         "generator for " + std::to_string(primes[i]) + " has a " +
                             (bad->in_numerator ? "zero" : "pole") +
                             " that is neither 0 nor a root of unity (factor " + to_string(bad->residual) +
                             ")");
    }
    pairs.push_back(std::get<FMultisetPair>(std::move(converted)));
  }

  if (options.check_commutativity) {
    // With t0 consistent the q-powers and scalars always commute; what is
    // left is the multiset identity U1 + p1*U2 + V2 + p2*V1 = U2 + p2*U1 + V1 + p1*V2.
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        const auto lhs = multiply_F_pairs(pairs[i], dilate_F_pair(pairs[j], primes[i]));
        const auto rhs = multiply_F_pairs(pairs[j], dilate_F_pair(pairs[i], primes[j]));
        if (lhs != rhs)
          throw NotASolution(Failure::commutativity,
                             "generators for " + pair_name(primes[i], primes[j]) + " do not commute");
      }
    }
  }

  const std::vector<FMultisetPair> original = pairs;
  for (;;) {
    std::size_t exhausted = 0;
    for (const auto& pair : pairs) exhausted += pair.empty();
    if (exhausted == pairs.size()) break;
    if (exhausted != 0)
      throw NotASolution(Failure::peeling_stall,
                         "some generators are exhausted while others still carry factors");

    const std::int64_t m0 = max_F(pairs[0]);
    if (m0 % primes[0] != 0)
      throw NotASolution(Failure::maxima_mismatch,
                         "largest index " + std::to_string(m0) + " for prime " + std::to_string(primes[0]) +
                             " is not a multiple of it");
    const std::int64_t r = m0 / primes[0];
    const bool numerator_side = pairs[0].U.contains(m0);
    for (std::size_t i = 1; i < primes.size(); ++i) {
      const std::int64_t m = max_F(pairs[i]);
      if (m != r * primes[i])
        throw NotASolution(Failure::maxima_mismatch,
                           "largest indices " + pair_name(m0, m) + " for primes " +
                               pair_name(primes[0], primes[i]) + " are not r*p for a common r");
      if (pairs[i].U.contains(m) != numerator_side)
        throw NotASolution(Failure::maxima_mismatch,
                           "largest indices for primes " + pair_name(primes[0], primes[i]) +
                               " lie on opposite sides");
    }

    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::int64_t before = weight(pairs[i]);
      peel(pairs[i], r, primes[i], numerator_side);
      if (weight(pairs[i]) >= before)
        throw NotASolution(Failure::peeling_stall, "peeling did not shrink the factor multisets");
    }
    sd.terms[r] += numerator_side ? 1 : -1;
  }
  std::erase_if(sd.terms, [](const auto& kv) { return kv.second == 0; });

  // prod_r [p]_{q^r}^{t_r} = prod_r (F_{rp} / F_r)^{t_r} must give back each pair.
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::map<std::int64_t, std::int64_t> e;
    for (auto [r, t] : sd.terms) {
      e[r * primes[i]] += t;
      e[r] -= t;
    }
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    if (from_net_exponents(e) != original[i])
      throw std::logic_error("decompose: reconstruction mismatch for prime " + std::to_string(primes[i]));
  }
  return sd;
}

}  // namespace qfe
