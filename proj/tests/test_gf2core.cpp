#include <random>

#include "doctest.h"
#include "invofix/error.hpp"
#include "invofix/gf2core.hpp"
#include "invofix/gf2linear.hpp"
#include "support.hpp"

using namespace invofix;

TEST_CASE("addition is symmetric difference") {
  test::Fixture f;
  const auto p = parse_polynomial(f.table, "a*b + c^2");
  const auto q = parse_polynomial(f.table, "c^2 + e");
  CHECK(p + q == parse_polynomial(f.table, "a*b + e"));
  CHECK((p + p).is_zero());
  CHECK(Polynomial(f.table, {Monomial::of(f.gens[0]), Monomial::of(f.gens[0])}).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  test::Fixture f;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = test::random_polynomial(f.table, f.gens, rng);
    const auto b = test::random_polynomial(f.table, f.gens, rng);
    const auto c = test::random_polynomial(f.table, f.gens, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * Polynomial::one(f.table) == a);
    CHECK((a * Polynomial(f.table)).is_zero());
  }
}

TEST_CASE("parallel and serial products agree") {
  test::Fixture f;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = test::random_polynomial(f.table, f.gens, rng, 60, 6);
    const auto b = test::random_polynomial(f.table, f.gens, rng, 60, 6);
    CHECK(mul(a, b) == mul_serial(a, b));
    const MulOptions caps{5, 12};
    CHECK(mul(a, b, caps) == mul_serial(a, b, caps));
    CHECK(mul(a, b, caps) == truncate_degree(truncate_base_degree(a * b, 5), 12));
  }
}

TEST_CASE("Frobenius is squaring") {
  test::Fixture f;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = test::random_polynomial(f.table, f.gens, rng);
    CHECK(frobenius(a, 1) == a * a);
    CHECK(frobenius(a, 2) == pow(a, 4));
    CHECK(pow(a, 5) == pow(a, 4) * a);
  }
}

TEST_CASE("grading") {
  test::Fixture f;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = test::random_polynomial(f.table, f.gens, rng);
    const auto b = test::random_polynomial(f.table, f.gens, rng);
    const int total = std::max(max_degree(a), 0) + std::max(max_degree(b), 0);
    for (int k = 0; k <= total; ++k) {
      Polynomial expected(f.table);
      for (int i = 0; i <= k; ++i) expected += component(a, i) * component(b, k - i);
      CHECK(component(a * b, k) == expected);
    }
    if (!a.is_zero() && !b.is_zero() && !(a * b).is_zero())
      CHECK(min_base_degree(a * b) >= min_base_degree(a) + min_base_degree(b));
  }
}

TEST_CASE("text round trip") {
  test::Fixture f;
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = test::random_polynomial(f.table, f.gens, rng);
    CHECK(parse_polynomial(f.table, to_string(a)) == a);
  }
  CHECK(to_string(Polynomial(f.table)) == "0");
  CHECK(to_string(Polynomial::one(f.table)) == "1");
  CHECK_THROWS_AS(parse_polynomial(f.table, "a + zz"), UsageError);
}

TEST_CASE("substitution is a ring homomorphism") {
  test::Fixture f;
  auto target = std::make_shared<GeneratorTable>();
  const GenId x = target->add("x", 1, Stratum::base);
  const GenId y = target->add("y", 1, Stratum::fiber);
  const Polynomial px = Polynomial::gen(target, x);
  const Polynomial py = Polynomial::gen(target, y);
  const std::map<GenId, Polynomial> images{
      {f.gens[0], px + py}, {f.gens[1], px * py}, {f.gens[2], py}, {f.gens[3], px * px * py}};
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = test::random_polynomial(f.table, f.gens, rng, 5, 2);
    const auto b = test::random_polynomial(f.table, f.gens, rng, 5, 2);
    CHECK(substitute(a * b, images, target) == substitute(a, images, target) * substitute(b, images, target));
    CHECK(substitute(a + b, images, target) == substitute(a, images, target) + substitute(b, images, target));
  }
}

TEST_CASE("coefficient extraction") {
  test::Fixture f;
  const auto p = parse_polynomial(f.table, "a*c^2 + b*c^2 + c^3 + a");
  CHECK(coefficient_of(p, f.gens[2], 2) == parse_polynomial(f.table, "a + b"));
  CHECK(max_exponent(p, f.gens[2]) == 3);
  CHECK(min_base_degree(p) == 0);
  CHECK(min_base_degree(Polynomial(f.table)) == kInfiniteDegree);
  CHECK(max_degree(Polynomial(f.table)) == -1);
}

TEST_CASE("tables do not mix") {
  test::Fixture f;
  test::Fixture g;
  CHECK_THROWS_AS(Polynomial::one(f.table) + Polynomial::one(g.table), UsageError);
}

TEST_CASE("elimination with provenance") {
  test::Fixture f;
  const std::vector<Monomial> mons{Monomial::of(f.gens[0]), Monomial::of(f.gens[2]), Monomial::of(f.gens[0], 2)};
  MonomialBasis basis(mons);
  Gf2Eliminator elim(basis.size());
  CHECK(elim.insert(basis.coordinates(parse_polynomial(f.table, "a + c")), 0));
  CHECK(elim.insert(basis.coordinates(parse_polynomial(f.table, "c + a^2")), 1));
  CHECK_FALSE(elim.insert(basis.coordinates(parse_polynomial(f.table, "a + a^2")), 2));
  const auto red = elim.reduce(basis.coordinates(parse_polynomial(f.table, "a + a^2")));
  CHECK(red.in_span());
  CHECK(red.combination == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(elim.reduce(basis.coordinates(parse_polynomial(f.table, "a"))).in_span());
  CHECK(xor_tags({1, 3, 5}, {3, 4}) == std::vector<std::size_t>{1, 4, 5});
}
