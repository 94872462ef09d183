#include "doctest.h"
#include "invofix/binomial.hpp"
#include "invofix/error.hpp"
#include "oracles.hpp"

using namespace invofix::binomial;

TEST_CASE("parity matches the Pascal table") {
  for (int a = 0; a < oracle::kPascalRows; ++a)
    for (int b = 0; b <= a; ++b) REQUIRE(parity(std::int64_t{a}, std::int64_t{b}) == oracle::pascal().at(a, b));
  CHECK(parity(std::int64_t{7}, std::int64_t{3}));
  CHECK_FALSE(parity(std::int64_t{5}, std::int64_t{2}));
  CHECK_FALSE(parity(std::int64_t{3}, std::int64_t{5}));
  CHECK_FALSE(parity(std::int64_t{4}, std::int64_t{-1}));
}

TEST_CASE("negative tops follow the inverse series") {
  for (int e = 0; e < 200; ++e) CHECK(parity(std::int64_t{-1}, std::int64_t{e}));
  // (1+c)^{-s} (1+c)^s = 1 coefficientwise.
  for (int s = 1; s < 40; ++s) {
    for (int e = 1; e < 60; ++e) {
      bool sum = false;
      for (int k = 0; k <= e; ++k) sum ^= parity(std::int64_t{-s}, std::int64_t{k}) && parity(std::int64_t{s}, std::int64_t{e - k});
      CHECK_FALSE(sum);
    }
  }
}

TEST_CASE("multiprecision parity agrees with int64") {
  for (std::int64_t a = -50; a < 300; a += 7)
    for (std::int64_t b = -2; b < 90; b += 3) CHECK(parity(BigInt(a), BigInt(b)) == parity(a, b));
  const BigInt huge = BigInt(1) << 200;
  CHECK(parity(huge - 1, BigInt(12345)));
  CHECK_FALSE(parity(huge, BigInt(1)));
}

TEST_CASE("two-adic decomposition") {
  auto check = [](int n, unsigned p, int q) {
    const auto t = two_adic(BigInt(n));
    CHECK(t.p == p);
    CHECK(t.q == q);
  };
  check(12, 2, 3);
  check(7, 0, 7);
  check(8, 3, 1);
  CHECK_THROWS_AS(two_adic(BigInt(0)), invofix::UsageError);
}

TEST_CASE("Stong-Pergher numbers") {
  CHECK(stong_pergher(std::int64_t{1}) == 2);
  CHECK(stong_pergher(std::int64_t{2}) == 5);
  CHECK(stong_pergher(std::int64_t{4}) == 10);
  CHECK(stong_pergher(std::int64_t{6}) == 11);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    REQUIRE(stong_pergher(n) == oracle::stong_pergher(n));
    const auto forms = stong_pergher_forms(BigInt(n));
    CHECK(forms.product_form == forms.linear_form);
    CHECK(2 * stong_pergher(n) <= 5 * n + 1);
  }
  CHECK_THROWS_AS(stong_pergher(std::int64_t{0}), invofix::UsageError);
}

TEST_CASE("tabulated items") {
  const auto r21 = paper_tables(2, BigInt(1));
  CHECK(r21.rows[0].items[0].top == 7);
  CHECK(r21.rows[0].items[0].bottom == 6);
  CHECK(r21.rows[0].items[0].computed);
  CHECK(r21.unique_zero_holds.value_or(false));
  const auto r35 = paper_tables(3, BigInt(5));
  CHECK(r35.rows[2].items[8].top == 44);
  CHECK(r35.rows[2].items[8].bottom == 4);
  CHECK(r35.rows[2].items[8].computed);
  for (unsigned p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 15; q += 2) {
      const auto r = paper_tables(p, BigInt(q));
      CHECK(r.items_consistent());
      for (const auto& row : r.rows)
        for (const auto& item : row.items)
          if (item.bottom >= 0 && item.top >= 0 && item.top < oracle::kPascalRows)
            CHECK(item.computed == oracle::binom(static_cast<std::int64_t>(item.top), static_cast<std::int64_t>(item.bottom)));
    }
  }
  // At p = 1 items (vi)-(ix) have negative bottom indices.
  CHECK(paper_tables(1, BigInt(3)).count(ItemStatus::vacuous) == 4);
  CHECK(paper_tables(2, BigInt(3)).count(ItemStatus::vacuous) == 0);
  CHECK_FALSE(paper_tables(1, BigInt(3)).unique_zero_holds.has_value());
}
