#include "invofix/binomial.hpp"

#include <limits>

#include "invofix/error.hpp"

namespace invofix::binomial {

namespace {

// Lucas: C(a, b) is odd iff the binary digits of b are a subset of those of a.
template <class Int>
bool parity_impl(const Int& top, const Int& bottom) {
  if (bottom < 0) return false;
  if (top < 0) {
    const Int shifted = bottom - top - 1;
    return (bottom & shifted) == bottom;
  }
  return (bottom & top) == bottom;
}

BigInt pow2(unsigned k) { return BigInt(1) << k; }

}  // namespace

bool parity(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0) return false;
  if (top < 0) {
    // bottom - top - 1 can exceed int64 near the extremes.
    if (bottom > std::numeric_limits<std::int64_t>::max() + top) return parity_impl(BigInt(top), BigInt(bottom));
    return parity_impl(top, bottom);
  }
  return parity_impl(top, bottom);
}

bool parity(const BigInt& top, const BigInt& bottom) { return parity_impl(top, bottom); }

TwoAdic two_adic(const BigInt& n) {
  if (n <= 0) throw UsageError("two_adic needs a positive integer");
  TwoAdic out;
  out.p = static_cast<unsigned>(boost::multiprecision::lsb(n));
  out.q = n >> out.p;
  return out;
}

StongPergherForms stong_pergher_forms(const BigInt& n) {
  const TwoAdic ta = two_adic(n);
  const BigInt p(ta.p);
  const BigInt& q = ta.q;
  StongPergherForms f;
  f.low_branch = p <= q;
  if (f.low_branch) {
    f.product_form = (pow2(ta.p + 1) - 1) * q + p + 1;
    f.linear_form = 2 * n + p - q + 1;
  } else {
    const unsigned gap = ta.p - static_cast<unsigned>(q);
    f.product_form = (pow2(ta.p + 1) - pow2(gap)) * q + pow2(gap) * (q + 1);
    f.linear_form = 2 * n + pow2(gap);
  }
  return f;
}

BigInt stong_pergher(const BigInt& n) {
  const TwoAdic ta = two_adic(n);
  if (BigInt(ta.p) <= ta.q) return 2 * n + ta.p - ta.q + 1;
  return 2 * n + pow2(ta.p - static_cast<unsigned>(ta.q));
}

std::int64_t stong_pergher(std::int64_t n) {
  const BigInt value = stong_pergher(BigInt(n));
  if (value > std::numeric_limits<std::int64_t>::max()) throw UsageError("stong_pergher overflows int64");
  return static_cast<std::int64_t>(value);
}

std::size_t BinomialTableReport::count(ItemStatus status) const {
  std::size_t total = 0;
  for (const auto& row : rows)
    for (const auto& item : row.items) total += item.status == status;
  return total;
}

BinomialTableReport paper_tables(unsigned p, const BigInt& q) {
  if (p < 1) throw UsageError("paper_tables needs p >= 1");
  if (q <= 0 || (q & 1) == 0) throw UsageError("paper_tables needs q odd and positive");

  BinomialTableReport report;
  report.p = p;
  report.q = q;
  const BigInt base = pow2(p) * q + pow2(p);  // 2^p q + 2^p

  for (unsigned i = 0; i < p; ++i) {
    const BigInt top = base - pow2(i);                // 2^p q + 2^p - 2^i
    const BigInt bottom = pow2(p + 1) - pow2(i + 1);  // 2^{p+1} - 2^{i+1}
    struct Spec {
      const char* label;
      int top_shift;
      int bottom_shift;
      bool stated;
    };
    const std::array<Spec, 9> specs{{
        {"i", 0, 0, true},
        {"ii", 1, 1, false},
        {"iii", 0, 1, i == 0},
        {"iv", 2, 2, i == 0},
        {"v", 1, 2, i == 0},
        {"vi", 3, 3, i == 1},
        {"vii", 2, 3, false},
        {"viii", 3, 4, i == 1},
        {"ix", 0, 4, i <= 2},
    }};
    TableRow row;
    row.i = i;
    for (std::size_t k = 0; k < specs.size(); ++k) {
      TableItem item;
      item.label = specs[k].label;
      item.top = top - specs[k].top_shift;
      item.bottom = bottom - specs[k].bottom_shift;
      item.computed = parity(item.top, item.bottom);
      item.stated = specs[k].stated;
      if (item.bottom < 0) {
        item.status = ItemStatus::vacuous;
      } else {
        item.status = item.computed == item.stated ? ItemStatus::agree : ItemStatus::disagree;
      }
      row.items[k] = std::move(item);
    }
    report.rows.push_back(std::move(row));
  }

  const BigInt l = base - 1;
  const BigInt t = pow2(p + 1) - 1;
  auto entry = [&](std::string label, const BigInt& top, const BigInt& bottom) {
    report.odd_display.push_back(DisplayBinomial{std::move(label), top, bottom, parity(top, bottom)});
    return report.odd_display.back().computed;
  };
  report.odd_coefficients_printed[0] = entry("alpha0", l, t);
  report.odd_coefficients_printed[1] = entry("alpha1.a", l - 1, t - 1) != entry("alpha1.b", l, t - 1);
  report.odd_coefficients_printed[2] = entry("alpha2.a", l - 2, t - 2) != entry("alpha2.b", l, t - 2);
  report.odd_coefficients_printed[3] = entry("alpha3.a", l - 3, t - 3) != entry("alpha3.b", l - 2, t - 3);
  const bool unique_candidate = entry("alpha4.a", l - 3, t - 4);
  report.odd_coefficients_printed[4] = unique_candidate != entry("alpha4.b", l, t - 4);

  report.odd_coefficients_general = report.odd_coefficients_printed;
  report.odd_coefficients_general[2] = parity(l - 2, t - 2) != parity(l - 1, t - 2);

  if (t - 4 < 0) {
    report.unique_zero_holds = std::nullopt;
  } else {
    bool holds = !unique_candidate;
    for (const auto& b : report.odd_display) {
      if (b.label == "alpha4.a" || b.bottom < 0) continue;
      if (!b.computed) holds = false;
    }
    report.unique_zero_holds = holds;
  }
  return report;
}

}  // namespace invofix::binomial
