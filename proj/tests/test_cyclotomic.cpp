#include <doctest.h>

#include <set>
#include <thread>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qfe/cyclotomic.hpp"
#include "qfe/number_theory.hpp"

using qfe::FMultisetPair;
using qfe::Polynomial;
using qfe::Rational;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

}  // namespace

TEST_CASE("moebius") {
  CHECK(qfe::moebius(1) == 1);
  CHECK(qfe::moebius(4) == 0);
  CHECK(qfe::moebius(6) == 1);
  CHECK(qfe::moebius(30) == -1);
  for (std::int64_t k = 1; k <= 500; ++k) {
    CHECK(qfe::moebius(k) == oracle::brute_moebius(k));
    int sum = 0;
    for (auto d : qfe::divisors(k)) sum += qfe::moebius(d);
    CHECK(sum == (k == 1 ? 1 : 0));
  }
  CHECK_THROWS_AS(qfe::moebius(0), std::invalid_argument);
}

TEST_CASE("number theory helpers") {
  for (std::int64_t n = 1; n <= 300; ++n) CHECK(qfe::totient(n) == oracle::brute_totient(n));
  for (std::int64_t bound = 1; bound <= 24; ++bound) {
    std::vector<std::int64_t> brute;
    for (std::int64_t d = 1; d <= 2 * bound * bound; ++d)
      if (oracle::brute_totient(d) <= bound) brute.push_back(d);
    CHECK(qfe::totient_preimage_upto(bound) == brute);
  }
  CHECK(qfe::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(qfe::cyclotomic(1) == P({-1, 1}));
  // q^6 - 1 divided by Phi_1 Phi_2 Phi_3, each obtained the same way
  const auto phi1 = oracle::divide(oracle::x_power_minus_one(1), {Rational(1)}).first;
  const auto phi2 = oracle::divide(oracle::x_power_minus_one(2), phi1).first;
  const auto phi3 = oracle::divide(oracle::x_power_minus_one(3), phi1).first;
  const auto phi6 =
      oracle::divide(oracle::x_power_minus_one(6), oracle::mul(oracle::mul(phi1, phi2), phi3)).first;
  CHECK(oracle::to_poly(phi6) == P({1, -1, 1}));
  CHECK(qfe::cyclotomic(6) == P({1, -1, 1}));
  const auto phi4 = oracle::divide(oracle::x_power_minus_one(4), oracle::mul(phi1, phi2)).first;
  CHECK(oracle::to_poly(phi4) == P({1, 0, 1}));
  CHECK(qfe::cyclotomic(4) == P({1, 0, 1}));

  for (std::int64_t k = 1; k <= 120; ++k) {
    const Polynomial& phi = qfe::cyclotomic(k);
    CHECK(phi == oracle::to_poly(oracle::moebius_cyclotomic(k)));
    CHECK(phi.degree() == oracle::brute_totient(k));
    CHECK(phi.is_monic());
    for (const auto& c : phi.coeffs()) CHECK(qfe::is_integer(c));
  }
  CHECK_THROWS_AS(qfe::cyclotomic(0), std::invalid_argument);
}

TEST_CASE("f_poly and prod_{d | k} Phi_d = F_k") {
  CHECK(qfe::f_poly(1) == P({-1, 1}));
  CHECK(qfe::f_poly(6) == P({-1, 0, 0, 0, 0, 0, 1}));
  for (std::int64_t k = 1; k <= 100; ++k) {
    Polynomial prod = P({1});
    for (auto d : qfe::divisors(k)) prod *= qfe::cyclotomic(d);
    CHECK(prod == qfe::f_poly(k));
  }
}

TEST_CASE("cyclotomic cache is consistent under concurrent use") {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 400; k < 440; ++k) ks.push_back(k);
  std::vector<std::vector<Polynomial>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < ks.size(); ++i) {
        const auto k = ks[(i + t * 7) % ks.size()];
        results[t].push_back(qfe::cyclotomic(k));
      }
    });
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < results.size(); ++t)
    for (std::size_t i = 0; i < ks.size(); ++i)
      CHECK(results[t][i] == oracle::to_poly(oracle::moebius_cyclotomic(ks[(i + t * 7) % ks.size()])));
}

TEST_CASE("cyclo_factor") {
  const auto a = qfe::cyclo_factor(P({1, 0, 0, 1}));
  CHECK(a.ok());
  CHECK(a.unit == 1);
  CHECK(a.qpower == 0);
  CHECK(a.factors == qfe::Multiset{{2, 1}, {6, 1}});
  // multiply Phi_2 Phi_6 back
  CHECK(oracle::to_poly(oracle::mul(oracle::of(qfe::cyclotomic(2)), oracle::of(qfe::cyclotomic(6)))) ==
        P({1, 0, 0, 1}));

  const auto b = qfe::cyclo_factor(P({0, 0, 0, 0, 0, -1, 1}));
  CHECK(b.ok());
  CHECK(b.unit == 1);
  CHECK(b.qpower == 5);
  CHECK(b.factors == qfe::Multiset{{1, 1}});

  const auto c = qfe::cyclo_factor(P({-2, 0, 1}));
  CHECK_FALSE(c.ok());
  CHECK(c.residual == P({-2, 0, 1}));
  CHECK(c.factors.empty());

  // 3 q^2 (q + 1)^2 (q - 1/2)
  const Polynomial mixed = P({0, 0, 3}) * P({1, 1}) * P({1, 1}) * Polynomial({Rational(-1, 2), Rational(1)});
  const auto d = qfe::cyclo_factor(mixed);
  CHECK_FALSE(d.ok());
  CHECK(d.unit == 3);
  CHECK(d.qpower == 2);
  CHECK(d.factors == qfe::Multiset{{2, 2}});
  CHECK(d.residual == Polynomial({Rational(-1, 2), Rational(1)}));
  CHECK(d.expand() == mixed);

  CHECK_THROWS_AS(qfe::cyclo_factor(Polynomial{}), std::domain_error);
}

TEST_CASE("cyclo_factor round trip") {
  gen::Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    qfe::Multiset planted;
    Polynomial p = Polynomial::constant(gen::small_rational(rng, true));
    const auto shift = gen::uniform(rng, 0, 3);
    p = p.shifted(shift);
    for (int i = 0, n = static_cast<int>(gen::uniform(rng, 0, 5)); i < n; ++i) {
      const auto k = gen::uniform(rng, 1, 60);
      ++planted[k];
      p *= qfe::cyclotomic(k);
    }
    const bool spoil = gen::uniform(rng, 0, 3) == 0;
    if (spoil) p *= P({-3, 1, 1});
    const auto f = qfe::cyclo_factor(p);
    CHECK(f.expand() == p);
    CHECK(f.ok() == !spoil);
    CHECK(f.factors == planted);
    CHECK(f.qpower == shift);
  }
}

TEST_CASE("to_F_pair") {
  auto a = std::get<FMultisetPair>(qfe::to_F_pair(P({1, -1, 1}), P({1})));
  CHECK(a.U == qfe::Multiset{{1, 1}, {6, 1}});
  CHECK(a.V == qfe::Multiset{{2, 1}, {3, 1}});
  // expand F_1 F_6 / (F_2 F_3) with the oracle
  const auto num = oracle::mul(oracle::x_power_minus_one(1), oracle::x_power_minus_one(6));
  const auto den = oracle::mul(oracle::x_power_minus_one(2), oracle::x_power_minus_one(3));
  const auto [quot, rem] = oracle::divide(num, den);
  CHECK(rem.empty());
  CHECK(oracle::to_poly(quot) == P({1, -1, 1}));

  auto b = std::get<FMultisetPair>(qfe::to_F_pair(P({1}), P({1})));
  CHECK(b.empty());
  CHECK(qfe::from_F_pair(b) == qfe::RationalFunction::one());

  auto c = std::get<FMultisetPair>(qfe::to_F_pair(qfe::quantum_integer(5), P({1})));
  CHECK(c.U == qfe::Multiset{{5, 1}});
  CHECK(c.V == qfe::Multiset{{1, 1}});

  auto bad = qfe::to_F_pair(P({1}), P({-2, 0, 1}).monic());
  REQUIRE(std::holds_alternative<qfe::NonCyclotomic>(bad));
  CHECK_FALSE(std::get<qfe::NonCyclotomic>(bad).in_numerator);

  CHECK_THROWS_AS(qfe::to_F_pair(P({0, 1}), P({1})), std::invalid_argument);
  CHECK_THROWS_AS(qfe::to_F_pair(P({1, 2}), P({1})), std::invalid_argument);
}

TEST_CASE("from_F_pair, dilate_F_pair, max_F") {
  const FMultisetPair two{{{2, 1}}, {{1, 1}}};
  CHECK(qfe::from_F_pair(two) == qfe::RationalFunction(P({1, 1})));
  const auto dil = qfe::dilate_F_pair(two, 3);
  CHECK(dil.U == qfe::Multiset{{6, 1}});
  CHECK(dil.V == qfe::Multiset{{3, 1}});
  CHECK(qfe::dilate_F_pair(two, 1) == two);

  CHECK(qfe::max_F({{{1, 1}, {6, 1}}, {{2, 1}, {3, 1}}}) == 6);
  CHECK(qfe::max_F({}) == 0);
  CHECK(qfe::max_F({{{5, 1}}, {{1, 1}}}) == 5);
  CHECK(qfe::max_F({{{2, 1}}, {{9, 2}}}) == 9);
}

TEST_CASE("F-pair uniqueness and round trip on random multisets") {
  gen::Rng rng(4242);
  std::vector<std::pair<FMultisetPair, qfe::RationalFunction>> seen;
  for (int trial = 0; trial < 120; ++trial) {
    const FMultisetPair pair = fixtures::random_pair(rng);
    const auto f = qfe::from_F_pair(pair);
    const auto s = qfe::to_standard_form(f);
    const auto back = qfe::to_F_pair(s.u, s.v);
    REQUIRE(std::holds_alternative<FMultisetPair>(back));
    const auto& got = std::get<FMultisetPair>(back);
    CHECK(got == pair);
    for (auto [k, m] : got.U) CHECK_FALSE(got.V.contains(k));
    const auto d = gen::uniform(rng, 1, 4);
    CHECK(qfe::from_F_pair(qfe::dilate_F_pair(pair, d)) == qfe::rf_compose_power(f, d));
    for (const auto& [other, g] : seen) CHECK((other == pair) == (g == f));
    seen.emplace_back(pair, f);
  }
}
