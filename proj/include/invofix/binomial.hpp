#pragma once

// Binomial coefficients mod 2 and the 2-adic bookkeeping around them.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace invofix::binomial {

using BigInt = boost::multiprecision::cpp_int;

// C(top, bottom) mod 2, read as the coefficient of c^bottom in the series
// (1+c)^top. Negative bottom gives 0; negative top uses
// (1+c)^{-s} = sum_e C(s+e-1, e) c^e.
bool parity(std::int64_t top, std::int64_t bottom);
bool parity(const BigInt& top, const BigInt& bottom);

struct TwoAdic {
  unsigned p = 0;
  BigInt q = 1;  // odd
};

TwoAdic two_adic(const BigInt& n);

// The bound for involutions fixing F^n and a point.
BigInt stong_pergher(const BigInt& n);
std::int64_t stong_pergher(std::int64_t n);

// Both closed forms printed for the branch that applies to n.
struct StongPergherForms {
  bool low_branch = true;  // p <= q
  BigInt product_form;     // (2^{p+1}-1)q+p+1  or  (2^{p+1}-2^{p-q})q+2^{p-q}(q+1)
  BigInt linear_form;      // 2n+p-q+1          or  2n+2^{p-q}
};
StongPergherForms stong_pergher_forms(const BigInt& n);

enum class ItemStatus { agree, disagree, vacuous };

// One binomial of the tabulated expansion of W[l]_{2r_i}. An item whose
// bottom index is negative multiplies d^{bottom}, which is not a class, so
// its stated value is vacuous.
struct TableItem {
  std::string label;  // "i" .. "ix"
  BigInt top;
  BigInt bottom;
  bool computed = false;
  bool stated = false;
  ItemStatus status = ItemStatus::agree;
};

struct TableRow {
  unsigned i = 0;
  std::array<TableItem, 9> items;
};

struct DisplayBinomial {
  std::string label;  // e.g. "a2.printed.2"
  BigInt top;
  BigInt bottom;
  bool computed = false;
};

struct BinomialTableReport {
  unsigned p = 0;
  BigInt q = 1;
  std::vector<TableRow> rows;

  // The expansion of W[l]_{2r+1}, l = 2^p q + 2^p - 1, t = 2^{p+1} - 1.
  std::vector<DisplayBinomial> odd_display;      // the nine printed binomials
  std::array<bool, 5> odd_coefficients_printed{};  // alpha^k coefficient from the printed pairs
  std::array<bool, 5> odd_coefficients_general{};  // from C(l-k.., t-k)-pairs of the general formula
  // Claim that C(2^pq+2^p-4, 2^{p+1}-5) is the only printed zero; nullopt when
  // that binomial is vacuous (p = 1).
  std::optional<bool> unique_zero_holds;

  std::size_t count(ItemStatus status) const;
  bool items_consistent() const { return count(ItemStatus::disagree) == 0; }
};

// Requires p >= 1 and q odd positive.
BinomialTableReport paper_tables(unsigned p, const BigInt& q);

}  // namespace invofix::binomial
