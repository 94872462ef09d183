#include <random>

#include "doctest.h"
#include "invofix/error.hpp"
#include "invofix/rings.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace invofix;

namespace {

Polynomial ad(int i, int j) {
  const auto& t = alpha_d_table();
  std::vector<Factor> f;
  if (i > 0) f.push_back({t.alpha, static_cast<Exponent>(i)});
  if (j > 0) f.push_back({t.d, static_cast<Exponent>(j)});
  return Polynomial::monomial(t.table, Monomial(std::move(f)));
}

oracle::Terms to_terms(const Polynomial& p) {
  const auto& t = alpha_d_table();
  oracle::Terms out;
  for (const auto& m : p.terms()) oracle::toggle(out, static_cast<int>(m.exponent(t.alpha)), static_cast<int>(m.exponent(t.d)));
  return out;
}

Polynomial random_ad(std::mt19937_64& rng, int max_d) {
  const auto& t = alpha_d_table();
  Polynomial out(t.table);
  const int n = std::uniform_int_distribution<int>(0, 12)(rng);
  for (int k = 0; k < n; ++k)
    out += ad(std::uniform_int_distribution<int>(0, 6)(rng), std::uniform_int_distribution<int>(0, max_d)(rng));
  return out;
}

}  // namespace

TEST_CASE("ring identities at the top") {
  for (int m = 12; m <= 60; ++m) {
    const RpMuRing ring(m);
    CHECK(ring.normal_form(ad(0, m - 1)) == ring.basis(4, m - 5));
    CHECK(ring.normal_form(ad(1, m - 2)).is_zero());
    CHECK(ring.normal_form(ad(2, m - 3)).is_zero());
    CHECK(ring.normal_form(ad(3, m - 4)) == ring.basis(4, m - 5));
    CHECK(RpMuRing::top_coefficient(ring.normal_form(ad(3, m - 4))));
    CHECK_FALSE(RpMuRing::top_coefficient(ring.normal_form(ad(2, m - 3))));
  }
  const RpMuRing r20(20);
  CHECK(r20.normal_form(ad(0, 17)).to_polynomial() == ad(4, 13));
  CHECK(r20.normal_form(ad(5, 0)).is_zero());
  CHECK(r20.normal_form(ad(4, 15)) == r20.basis(4, 15));
  CHECK(r20.normal_form(ad(4, 16)).is_zero());
  CHECK(r20.normal_form(ad(0, 20)).is_zero());
}

TEST_CASE("hand reduction for m = 20") {
  const RpMuRing ring(20);
  CHECK(ring.normal_form(ad(0, 19)) == ring.basis(4, 15));
  std::mt19937_64 rng(1);
  oracle::Terms t{{0, 17}};
  CHECK(oracle::naive_normal_form(t, 20, rng) == to_terms(ring.normal_form(ad(0, 17)).to_polynomial()));
}

TEST_CASE("normal form is confluent") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = std::uniform_int_distribution<int>(8, 40)(rng);
    const RpMuRing ring(m);
    const Polynomial p = random_ad(rng, m + 6);
    const Polynomial fast = ring.normal_form(p).to_polynomial();
    REQUIRE(fast == rewrite_normal_form(p, ring.presentation()));
    std::mt19937_64 order_a(static_cast<std::uint64_t>(trial));
    std::mt19937_64 order_b(static_cast<std::uint64_t>(trial) + 1000);
    const auto a = oracle::naive_normal_form(to_terms(p), m, order_a);
    const auto b = oracle::naive_normal_form(to_terms(p), m, order_b);
    CHECK(a == b);
    CHECK(a == to_terms(fast));
  }
}

TEST_CASE("ring product agrees with reducing the polynomial product") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = std::uniform_int_distribution<int>(8, 30)(rng);
    const RpMuRing ring(m);
    const Polynomial a = random_ad(rng, m);
    const Polynomial b = random_ad(rng, m);
    const RpMuElement ea = ring.normal_form(a);
    const RpMuElement eb = ring.normal_form(b);
    CHECK(ring.mul(ea, eb) == ring.normal_form(a * b));
    CHECK(ring.mul(ea, eb) == ring.mul(eb, ea));
    CHECK(ring.mul(ea, ring.one()) == ea);
    CHECK(ring.pow(ea, 3) == ring.mul(ea, ring.mul(ea, ea)));
    CHECK(ring.normal_form(a + b) == ea + eb);
  }
}

TEST_CASE("normal form rejects foreign generators") {
  test::Fixture f;
  const RpMuRing ring(12);
  CHECK_THROWS_AS(ring.normal_form(Polynomial::gen(f.table, f.gens[0])), UsageError);
  CHECK_THROWS_AS(RpMuPresentation(RpMuPresentation::kMinM - 1), UsageError);
}

TEST_CASE("reduction modulo the base ideal") {
  CHECK(mod_base_ideal(ad(2, 1) + ad(0, 3)) == ad(0, 3));
  CHECK(mod_base_ideal(ad(0, 7)) == ad(0, 7));
  // (1+alpha+alpha^4)(1+d)^5 keeps only (1+d)^5.
  const auto& t = alpha_d_table();
  const Polynomial unit = ad(0, 0) + ad(1, 0) + ad(4, 0);
  const Polynomial one_d = pow(ad(0, 0) + Polynomial::gen(t.table, t.d), 5);
  CHECK(mod_base_ideal(unit * one_d) == one_d);
}
