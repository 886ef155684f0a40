#include "qfe/solutions.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "qfe/number_theory.hpp"

namespace qfe {

struct SolutionSpec::Cache {
  std::mutex mutex;
  std::optional<CommutativityReport> commutativity;
  std::map<std::int64_t, RationalFunction> values;
};

SolutionSpec::SolutionSpec(PrimeList primes, std::map<std::int64_t, RationalFunction> generators)
    : primes_(std::move(primes)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i]))
      throw std::invalid_argument("not a prime: " + std::to_string(primes_[i]));
    if (i > 0 && primes_[i] <= primes_[i - 1])
      throw std::invalid_argument("primes must be strictly increasing");
  }
  if (generators_.size() != primes_.size())
    throw std::invalid_argument("exactly one generator per prime is required");
  for (std::int64_t p : primes_) {
    auto it = generators_.find(p);
    if (it == generators_.end())
      throw std::invalid_argument("missing generator for prime " + std::to_string(p));
    if (it->second.is_zero())
      throw std::invalid_argument("generator for prime " + std::to_string(p) + " is zero");
  }
}

const RationalFunction& SolutionSpec::generator(std::int64_t p) const {
  auto it = generators_.find(p);
  if (it == generators_.end()) throw std::out_of_range("no generator for " + std::to_string(p));
  return it->second;
}

bool support_membership(const PrimeList& primes, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("support_membership: n must be positive");
  for (auto [p, e] : factorize(n))
    if (!std::binary_search(primes.begin(), primes.end(), p)) return false;
  return true;
}

CommutativityReport check_commutativity(const SolutionSpec& spec) {
  {
    std::lock_guard lock(spec.cache_->mutex);
    if (spec.cache_->commutativity) return *spec.cache_->commutativity;
  }
  CommutativityReport report;
  const auto& primes = spec.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const auto p1 = primes[i], p2 = primes[j];
      const auto& h1 = spec.generator(p1);
      const auto& h2 = spec.generator(p2);
      if (h1 * rf_compose_power(h2, p1) != h2 * rf_compose_power(h1, p2)) {
        report.commutes = false;
        report.violations.emplace_back(p1, p2);
      }
    }
  }
  std::lock_guard lock(spec.cache_->mutex);
  spec.cache_->commutativity = report;
  return report;
}

RationalFunction prime_power_value(const RationalFunction& h_p, std::int64_t p, int k) {
  RationalFunction out = RationalFunction::one();
  std::int64_t dilation = 1;
  for (int i = 0; i < k; ++i) {
    out = out * rf_compose_power(h_p, dilation);
    dilation *= p;
  }
  return out;
}

namespace {

RationalFunction fold(const SolutionSpec& spec, const Factorization& powers) {
  // f_{m p^a}(q) = f_m(q) f_{p^a}(q^m)
  RationalFunction acc = RationalFunction::one();
  std::int64_t m = 1;
  for (auto [p, a] : powers) {
    acc = acc * rf_compose_power(prime_power_value(spec.generator(p), p, a), m);
    m *= ipow(p, a);
  }
  return acc;
}

}  // namespace

RationalFunction synthesize_unchecked(const SolutionSpec& spec, std::int64_t n) {
  if (!support_membership(spec.primes(), n)) return {};
  return fold(spec, factorize(n));
}

RationalFunction synthesize_ordered(const SolutionSpec& spec, std::int64_t n,
                                    std::span<const std::int64_t> order) {
  if (!support_membership(spec.primes(), n)) return {};
  const Factorization natural = factorize(n);
  if (order.size() != natural.size())
    throw std::invalid_argument("synthesize_ordered: order must list each prime factor once");
  Factorization reordered;
  for (std::int64_t p : order) {
    auto it = std::find_if(natural.begin(), natural.end(), [p](const auto& pe) { return pe.first == p; });
    if (it == natural.end() ||
        std::any_of(reordered.begin(), reordered.end(), [p](const auto& pe) { return pe.first == p; }))
      throw std::invalid_argument("synthesize_ordered: order must list each prime factor once");
    reordered.push_back(*it);
  }
  return fold(spec, reordered);
}

RationalFunction synthesize(const SolutionSpec& spec, std::int64_t n) {
  if (!support_membership(spec.primes(), n)) return {};
  if (n == 1) return RationalFunction::one();
  const CommutativityReport report = check_commutativity(spec);
  if (!report.commutes) {
    const auto [p1, p2] = report.violations.front();
    throw NotASolution(Failure::commutativity,
                       "generators for " + std::to_string(p1) + " and " + std::to_string(p2) +
                           " do not commute");
  }
  {
    std::lock_guard lock(spec.cache_->mutex);
    if (auto it = spec.cache_->values.find(n); it != spec.cache_->values.end()) return it->second;
  }
  RationalFunction value = fold(spec, factorize(n));
  std::lock_guard lock(spec.cache_->mutex);
  return spec.cache_->values.try_emplace(n, std::move(value)).first->second;
}

bool verify_fe(const SolutionSpec& spec, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("verify_fe: m and n must be positive");
  const bool commutes = check_commutativity(spec).commutes;
  auto f = [&](std::int64_t k) { return commutes ? synthesize(spec, k) : synthesize_unchecked(spec, k); };
  const RationalFunction fm = f(m), fn = f(n);
  const RationalFunction lhs = fm * rf_compose_power(fn, m);
  if (f(m * n) != lhs) return false;
  return lhs == fn * rf_compose_power(fm, n);
}

SolutionSpec combine_solutions(const SolutionSpec& f, const SolutionSpec& g, std::int64_t r,
                               std::int64_t s, std::int64_t d, std::int64_t e) {
  if (f.primes() != g.primes())
    throw std::invalid_argument("combine_solutions: solutions must share the prime set");
  if (r < 1 || s < 1) throw std::invalid_argument("combine_solutions: r and s must be positive");
  std::map<std::int64_t, RationalFunction> out;
  for (std::int64_t p : f.primes())
    out.emplace(p, rf_pow(rf_compose_power(f.generator(p), r), d) *
                       rf_pow(rf_compose_power(g.generator(p), s), e));
  return SolutionSpec(f.primes(), std::move(out));
}

SolutionSpec invert_solution(const SolutionSpec& f) {
  std::map<std::int64_t, RationalFunction> out;
  for (const auto& [p, h] : f.generators()) out.emplace(p, rf_pow(h, -1));
  return SolutionSpec(f.primes(), std::move(out));
}

}  // namespace qfe
