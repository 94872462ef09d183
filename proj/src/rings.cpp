#include "invofix/rings.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "invofix/error.hpp"

namespace invofix {

const AlphaDTable& alpha_d_table() {
  static const AlphaDTable instance = [] {
    auto table = std::make_shared<GeneratorTable>();
    const GenId alpha = table->add("alpha", 1, Stratum::base);
    const GenId d = table->add("d", 1, Stratum::fiber);
    return AlphaDTable{table, alpha, d};
  }();
  return instance;
}

RpMuPresentation::RpMuPresentation(int m) : m_(m) {
  if (m < kMinM) throw UsageError("RP(mu) presentation needs m >= " + std::to_string(kMinM) + ", got " + std::to_string(m));
}

// ------------------------------------------------------------- RpMuElement

RpMuElement::RpMuElement(const RpMuPresentation& pres) : pres_(pres) {
  for (auto& row : rows_) row.resize(static_cast<std::size_t>(pres.fiber_rank()));
}

bool RpMuElement::coefficient(int i, int j) const {
  if (i < 0 || i > kBaseTop || j < 0 || j >= pres_.fiber_rank()) return false;
  return rows_[i].test(static_cast<std::size_t>(j));
}

void RpMuElement::flip(int i, int j) {
  if (i < 0 || i > kBaseTop || j < 0 || j >= pres_.fiber_rank())
    throw UsageError("basis index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  rows_[i].flip(static_cast<std::size_t>(j));
}

bool RpMuElement::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

RpMuElement RpMuElement::component(int t) const {
  RpMuElement out(pres_);
  for (int i = 0; i <= kBaseTop; ++i) {
    if (coefficient(i, t - i)) out.flip(i, t - i);
  }
  return out;
}

RpMuElement& RpMuElement::operator+=(const RpMuElement& other) {
  if (!(pres_ == other.pres_)) throw UsageError("RP(mu) elements over different presentations");
  for (int i = 0; i <= kBaseTop; ++i) rows_[i] ^= other.rows_[i];
  return *this;
}

bool operator==(const RpMuElement& a, const RpMuElement& b) {
  return a.pres_ == b.pres_ && a.rows_ == b.rows_;
}

Polynomial RpMuElement::to_polynomial() const {
  const auto& ad = alpha_d_table();
  std::vector<Monomial> terms;
  for (int i = 0; i <= kBaseTop; ++i) {
    const auto& row = rows_[i];
    for (auto j = row.find_first(); j != BitVector::npos; j = row.find_next(j)) {
      terms.push_back(Monomial({Factor{ad.alpha, static_cast<Exponent>(i)}, Factor{ad.d, static_cast<Exponent>(j)}}));
    }
  }
  return Polynomial(ad.table, std::move(terms));
}

// ----------------------------------------------------------------- RpMuRing

RpMuElement RpMuRing::reduce(std::array<BitVector, kBaseTop + 1> rows) const {
  const int k = pres_.fiber_rank();
  // Anything above the top degree m-1 vanishes, so rows never need more
  // than m bits.
  for (int i = 0; i <= kBaseTop; ++i) {
    const auto limit = static_cast<std::size_t>(std::max(0, pres_.m() - i));
    if (rows[i].size() > limit) rows[i].resize(limit);
  }
  for (int j = static_cast<int>(rows[0].size()) - 1; j >= k; --j) {
    for (int i = 0; i <= kBaseTop; ++i) {
      if (static_cast<std::size_t>(j) >= rows[i].size() || !rows[i].test(j)) continue;
      rows[i].reset(j);
      // d^j = alpha d^{j-1} + alpha^2 d^{j-2} + alpha^3 d^{j-3} for j >= k.
      for (int s = 1; s <= 3 && i + s <= kBaseTop; ++s) rows[i + s].flip(j - s);
    }
  }
  RpMuElement out(pres_);
  for (int i = 0; i <= kBaseTop; ++i) {
    rows[i].resize(static_cast<std::size_t>(k));
    out.rows_[i] = std::move(rows[i]);
  }
  return out;
}

RpMuElement RpMuRing::normal_form(const Polynomial& p) const {
  const auto& ad = alpha_d_table();
  if (p.table() != ad.table) {
    // Accept any table as long as only alpha and d appear by name.
    const auto& table = *p.table();
    const auto alpha = table.find("alpha");
    const auto d = table.find("d");
    std::vector<Monomial> terms;
    for (const auto& m : p.terms()) {
      std::vector<Factor> factors;
      for (const auto& f : m.factors()) {
        if (alpha && f.gen == *alpha) {
          factors.push_back(Factor{ad.alpha, f.exp});
        } else if (d && f.gen == *d) {
          factors.push_back(Factor{ad.d, f.exp});
        } else {
          throw UsageError("normal_form: foreign generator '" + table[f.gen].name + "'");
        }
      }
      terms.emplace_back(std::move(factors));
    }
    return normal_form(Polynomial(ad.table, std::move(terms)));
  }

  std::array<BitVector, kBaseTop + 1> rows;
  for (auto& row : rows) row.resize(static_cast<std::size_t>(pres_.m()));
  for (const auto& m : p.terms()) {
    const auto i = m.exponent(ad.alpha);
    const auto j = m.exponent(ad.d);
    if (i > kBaseTop || static_cast<long>(i) + j > pres_.top_degree()) continue;
    rows[i].flip(j);
  }
  return reduce(std::move(rows));
}

RpMuElement RpMuRing::basis(int i, int j) const {
  std::array<BitVector, kBaseTop + 1> rows;
  for (auto& row : rows) row.resize(static_cast<std::size_t>(pres_.m()));
  if (i >= 0 && i <= kBaseTop && j >= 0 && i + j <= pres_.top_degree()) rows[i].set(j);
  return reduce(std::move(rows));
}

RpMuElement RpMuRing::mul(const RpMuElement& a, const RpMuElement& b) const {
  if (!(a.presentation() == pres_) || !(b.presentation() == pres_))
    throw UsageError("RP(mu) element over a different presentation");
  const auto width = static_cast<std::size_t>(2 * pres_.fiber_rank());
  std::array<BitVector, kBaseTop + 1> rows;
  for (auto& row : rows) row.resize(width);
  for (int i = 0; i <= kBaseTop; ++i) {
    const auto& ra = a.rows_[i];
    if (ra.none()) continue;
    for (int k = 0; i + k <= kBaseTop; ++k) {
      BitVector rb = b.rows_[k];
      if (rb.none()) continue;
      rb.resize(width);
      // Carryless product of the two d-polynomials.
      for (auto j = ra.find_first(); j != BitVector::npos; j = ra.find_next(j)) rows[i + k] ^= rb << j;
    }
  }
  return reduce(std::move(rows));
}

RpMuElement RpMuRing::pow(const RpMuElement& a, std::uint64_t e) const {
  RpMuElement result = one();
  RpMuElement base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool RpMuRing::top_coefficient(const RpMuElement& e) {
  return e.coefficient(kBaseTop, e.presentation().fiber_rank() - 1);
}

Polynomial rewrite_normal_form(const Polynomial& p, const RpMuPresentation& pres) {
  const auto& ad = alpha_d_table();
  std::set<std::pair<std::int64_t, std::int64_t>, std::greater<>> terms;  // (d-exponent, alpha-exponent)
  auto toggle = [&](std::int64_t j, std::int64_t i) {
    if (i > kBaseTop) return;
    auto [it, inserted] = terms.emplace(j, i);
    if (!inserted) terms.erase(it);
  };
  const auto& table = *p.table();
  for (const auto& m : p.terms()) {
    std::int64_t i = 0;
    std::int64_t j = 0;
    for (const auto& f : m.factors()) {
      const auto& name = table[f.gen].name;
      if (name == "alpha") {
        i = f.exp;
      } else if (name == "d") {
        j = f.exp;
      } else {
        throw UsageError("rewrite_normal_form: foreign generator '" + name + "'");
      }
    }
    toggle(j, i);
  }
  const std::int64_t k = pres.fiber_rank();
  while (!terms.empty() && terms.begin()->first >= k) {
    const auto [j, i] = *terms.begin();
    terms.erase(terms.begin());
    for (int s = 1; s <= 3; ++s) toggle(j - s, i + s);
  }
  std::vector<Monomial> out;
  for (const auto& [j, i] : terms) {
    out.push_back(Monomial({Factor{ad.alpha, static_cast<Exponent>(i)}, Factor{ad.d, static_cast<Exponent>(j)}}));
  }
  return Polynomial(ad.table, std::move(out));
}

Polynomial mod_base_ideal(const Polynomial& p) {
  const auto& table = *p.table();
  return filter(p, [&](const Monomial& m) { return m.base_degree(table) == 0; });
}

}  // namespace invofix
