#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library: binomials come from a Pascal table, ring elements are plain
// sets of (alpha exponent, d exponent) pairs, and reduction applies the
// defining relation to randomly chosen terms.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr int kPascalRows = 512;

class Pascal {
 public:
  Pascal() : rows_(kPascalRows) {
    for (int a = 0; a < kPascalRows; ++a) {
      rows_[a].assign(static_cast<std::size_t>(a) + 1, false);
      rows_[a][0] = rows_[a][a] = true;
      for (int b = 1; b < a; ++b) rows_[a][b] = rows_[a - 1][b - 1] != rows_[a - 1][b];
    }
  }
  bool at(int a, int b) const {
    if (b < 0 || b > a) return false;
    return rows_.at(static_cast<std::size_t>(a))[static_cast<std::size_t>(b)];
  }

 private:
  std::vector<std::vector<bool>> rows_;
};

inline const Pascal& pascal() {
  static const Pascal table;
  return table;
}

// Coefficient of c^bottom in (1+c)^top, any integer top.
inline bool binom(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0) return false;
  if (top >= 0) return pascal().at(static_cast<int>(top), static_cast<int>(bottom));
  return pascal().at(static_cast<int>(-top + bottom - 1), static_cast<int>(bottom));
}

// n = 2^p q with q odd.
inline std::pair<int, std::int64_t> two_adic(std::int64_t n) {
  int p = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++p;
  }
  return {p, n};
}

inline std::int64_t stong_pergher(std::int64_t n) {
  const auto [p, q] = two_adic(n);
  if (p <= q) return 2 * n + p - q + 1;
  return 2 * n + (std::int64_t{1} << (p - q));
}

using Terms = std::set<std::pair<int, int>>;  // alpha^i d^j

inline void toggle(Terms& t, int i, int j) {
  if (i > 4) return;
  const auto key = std::make_pair(i, j);
  if (!t.erase(key)) t.insert(key);
}

inline Terms mul(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [i1, j1] : a)
    for (const auto& [i2, j2] : b) toggle(out, i1 + i2, j1 + j2);
  return out;
}

inline Terms pow(const Terms& a, int e) {
  Terms out{{0, 0}};
  for (int k = 0; k < e; ++k) out = mul(out, a);
  return out;
}

// Degree-t part of (1+alpha+alpha^4) sum_{b<4} alpha^b (1+d)^{l-b}.
inline Terms bracket(std::int64_t l, int t) {
  Terms out;
  for (int a : {0, 1, 4}) {
    for (int b = 0; b < 4; ++b) {
      const int j = t - a - b;
      if (j >= 0 && binom(l - b, j)) toggle(out, a + b, j);
    }
  }
  return out;
}

// d^{m-4} -> alpha d^{m-5} + alpha^2 d^{m-6} + alpha^3 d^{m-7}, applied to a
// random reducible term until none is left.
inline Terms naive_normal_form(Terms t, int m, std::mt19937_64& rng) {
  const int k = m - 4;
  for (;;) {
    std::vector<std::pair<int, int>> reducible;
    for (const auto& term : t)
      if (term.second >= k) reducible.push_back(term);
    if (reducible.empty()) return t;
    const auto [i, j] = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
    toggle(t, i, j);
    for (int s = 1; s <= 3; ++s) toggle(t, i + s, j - s);
  }
}

struct Factor {
  std::int64_t r;
  int degree;
  int multiplicity;
};

// Factors of X (and of Y) from the 2-adic form of n - 4.
inline std::vector<Factor> x_factors(int n) {
  const auto [p, q] = two_adic(n - 4);
  std::vector<Factor> out;
  const std::int64_t two_p = std::int64_t{1} << p;
  auto r_i = [&](int i) { return two_p - (std::int64_t{1} << (p - i)); };
  if (p <= q) {
    out.push_back({two_p - 1, static_cast<int>(2 * (two_p - 1) + 1), static_cast<int>(q + 1 - p)});
    for (int i = 1; i <= p; ++i) out.push_back({r_i(i), static_cast<int>(2 * r_i(i)), 1});
  } else {
    for (int i = 1; i <= q + 1; ++i) out.push_back({r_i(i), static_cast<int>(2 * r_i(i)), 1});
  }
  return out;
}

inline Terms y_class(int n) {
  Terms y{{0, 0}};
  for (const auto& f : x_factors(n)) y = mul(y, pow(bracket(n - 4 + f.r, f.degree), f.multiplicity));
  return y;
}

// Evaluation of Y * W[n-4]_2^4 * d^{m-1-(M(n-4)+8)} on the top class.
inline bool final_even_number(int n, int m, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  const std::int64_t mm = stong_pergher(n - 4);
  Terms product = mul(y_class(n), pow(bracket(n - 4, 2), 4));
  product = mul(product, Terms{{0, static_cast<int>(m - 1 - (mm + 8))}});
  return naive_normal_form(product, m, rng).count({4, m - 5}) == 1;
}

inline bool odd_case_number(int n, int m, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  Terms product = mul(pow(bracket(n - 4, 1), n + 3), Terms{{0, m - 1 - (n + 3)}});
  return naive_normal_form(product, m, rng).count({4, m - 5}) == 1;
}

}  // namespace oracle
