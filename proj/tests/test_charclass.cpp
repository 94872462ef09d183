#include "doctest.h"
#include "invofix/binomial.hpp"
#include "invofix/charclass.hpp"
#include "invofix/error.hpp"
#include "oracles.hpp"

using namespace invofix;

namespace {

Polynomial ad(int i, int j) {
  const auto& t = alpha_d_table();
  std::vector<Factor> f;
  if (i > 0) f.push_back({t.alpha, static_cast<Exponent>(i)});
  if (j > 0) f.push_back({t.d, static_cast<Exponent>(j)});
  return Polynomial::monomial(t.table, Monomial(std::move(f)));
}

Polynomial from_terms(const oracle::Terms& terms) {
  Polynomial out(alpha_d_table().table);
  for (const auto& [i, j] : terms) out += ad(i, j);
  return out;
}

}  // namespace

TEST_CASE("bracket values") {
  const RpMuRing ring(60);
  CHECK(bracket_f4(7, 2, ring).to_polynomial() == ad(0, 2) + ad(1, 1));
  CHECK(bracket_f4(7, 3, ring).to_polynomial() == ad(0, 3) + ad(2, 1));
  CHECK(bracket_f4(7, 6, ring).to_polynomial() == ad(0, 6) + ad(1, 5) + ad(4, 2));
  for (int n = 5; n <= 41; n += 2) CHECK(bracket_f4(n - 4, 1, ring).to_polynomial() == ad(0, 1));
}

TEST_CASE("bracket closed form and expansion agree with the Pascal oracle") {
  const RpMuRing ring(40);
  for (std::int64_t l = -40; l <= 150; ++l) {
    for (int t = 0; t <= 24; ++t) {
      const Polynomial expected = from_terms(oracle::bracket(l, t));
      REQUIRE(bracket_f4_expansion(l, t) == expected);
      CHECK(bracket_f4_closed_form(l, t, ring) == ring.normal_form(expected));
    }
  }
}

TEST_CASE("projectivization of a trivial bundle over a point") {
  const auto side = fn_side(4);
  const TotalClass point{Polynomial::one(side->table), 4};
  const TotalClass trivial{Polynomial::one(side->table), 4};
  const TotalClass w = projectivization_class(point, trivial, 2, side->c, 4);
  CHECK(w.total == pow(Polynomial::one(side->table) + side->c_poly(), 2));
  CHECK(w.total == Polynomial::one(side->table) + side->c_poly(2));
}

TEST_CASE("projectivization over RP^4 matches the bracket family") {
  const auto& t = alpha_d_table();
  const Polynomial alpha = Polynomial::gen(t.table, t.alpha);
  const Polynomial one = Polynomial::one(t.table);
  for (int m : {12, 13, 20}) {
    const TotalClass base{truncate_degree(pow(one + alpha, 5), 4), 4};
    const TotalClass bundle{truncate_degree(pow(one + alpha, 3), 3), 3};
    const TotalClass w = projectivization_class(base, bundle, m - 4, t.d, 12);
    for (int j = 0; j <= 12; ++j)
      CHECK(filter(w.component(j), [&](const Monomial& mono) { return mono.exponent(t.alpha) <= 4; }) ==
            bracket_f4_expansion(m - 4, j));
    CHECK(w.component(1) == (m % 2 == 0 ? Polynomial(t.table) : Polynomial::gen(t.table, t.d)));
  }
}

TEST_CASE("bracket on the F^n side") {
  const auto side = fn_side(6);
  for (int n : {5, 7, 12}) {
    CHECK(bracket_fn(*side, 0, 1, n) == side->theta_poly(1) + side->u_poly(1));
    CHECK(bracket_fn(*side, 0, 2, n) == side->theta_poly(2) + side->theta_poly(1) * side->u_poly(1) +
                                            side->u_poly(1) * side->c_poly() + side->u_poly(2));
  }
}

TEST_CASE("X recipe matches the independent factor list") {
  for (int n = 5; n <= 80; ++n) {
    const XRecipe recipe = x_recipe(n);
    const auto expected = oracle::x_factors(n);
    REQUIRE(recipe.factors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(recipe.factors[i].r == expected[i].r);
      CHECK(recipe.factors[i].degree == expected[i].degree);
      CHECK(recipe.factors[i].multiplicity == static_cast<unsigned>(expected[i].multiplicity));
    }
    CHECK(recipe.degree() == oracle::stong_pergher(n - 4));
  }
  CHECK_THROWS_AS(x_recipe(4), UsageError);
}

TEST_CASE("Y for n = 8") {
  const RpMuRing ring(19);
  CHECK(build_Y(8, ring).value.to_polynomial() == ad(0, 10) + ad(1, 9) + ad(3, 7));
  CHECK(build_Y(8, ring).value.to_polynomial() == from_terms(oracle::y_class(8)));
}

TEST_CASE("Y agrees with the oracle and reduces to a d-power modulo the base ideal") {
  for (int n = 6; n <= 24; n += 2) {
    const int m = static_cast<int>(oracle::stong_pergher(n - 4)) + 9;
    const RpMuRing ring(m);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    const auto expected = oracle::naive_normal_form(oracle::y_class(n), m, rng);
    const YClass y = build_Y(n, ring);
    CHECK(y.value.to_polynomial() == from_terms(expected));
    CHECK(mod_base_ideal(y.value.to_polynomial()) == ad(0, static_cast<int>(oracle::stong_pergher(n - 4))));
  }
}

TEST_CASE("power identity") {
  CHECK(power_identity_check(3, 2).status == Status::pass);
  CHECK(power_identity_check(3, 3).status == Status::pass);
  CHECK(power_identity_check(5, 4).status == Status::pass);
}

TEST_CASE("fourth power of W[n-4]_2") {
  const RpMuRing ring(40);
  CHECK(w2_family(6, ring).value.to_polynomial() == ad(0, 8) + ad(4, 4));
  CHECK(w2_family(8, ring).value.to_polynomial() == ad(4, 4));
  CHECK(w2_family(12, ring).value.to_polynomial() == ad(4, 4));
}

TEST_CASE("final numbers agree with the brute-force oracle") {
  CHECK(final_even_number(8, 19).value);
  for (int n = 6; n <= 16; n += 2) {
    const int base = static_cast<int>(oracle::stong_pergher(n - 4)) + 9;
    for (int m : {base, base + 3}) {
      const FinalNumber f = final_even_number(n, m);
      CHECK(f.value == oracle::final_even_number(n, m));
      CHECK(f.report.status != Status::fail);
    }
  }
  CHECK_THROWS_AS(final_even_number(8, 18), UsageError);
}

TEST_CASE("odd-n characteristic number") {
  CHECK(odd_case_number(5, 9));
  CHECK(odd_case_number(7, 11));
  CHECK(odd_case_number(41, 45));
  for (int n = 5; n <= 21; n += 2)
    for (int m : {n + 4, n + 7}) CHECK(odd_case_number(n, m) == oracle::odd_case_number(n, m));
  CHECK(odd_case_check(9, 13).status == Status::pass);
  CHECK_THROWS_AS(odd_case_number(6, 12), UsageError);
}

TEST_CASE("X side vanishing on a small case") {
  const auto side = fn_side(8, 6, 6);
  const Polynomial w2 = pow(bracket_fn(*side, 0, 2, 6), 4);
  CHECK(x_side_vanishing(*side, 6, w2, "W[0]_2^4").status == Status::pass);
}
