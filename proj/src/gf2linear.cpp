#include "invofix/gf2linear.hpp"

#include <algorithm>
#include <iterator>

#include "invofix/error.hpp"

namespace invofix {

MonomialBasis::MonomialBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (!index_.emplace(monomials_[i], i).second) throw UsageError("duplicate monomial in basis");
  }
}

std::optional<std::size_t> MonomialBasis::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BitVector MonomialBasis::coordinates(const Polynomial& p) const {
  BitVector v(size());
  for (const auto& m : p.terms()) {
    auto i = index(m);
    if (!i) throw UsageError("term " + to_string(m, *p.table()) + " lies outside the basis");
    v.flip(*i);
  }
  return v;
}

Polynomial MonomialBasis::polynomial(const BitVector& v, const TablePtr& table) const {
  std::vector<Monomial> terms;
  for (auto i = v.find_first(); i != BitVector::npos; i = v.find_next(i)) terms.push_back(monomials_[i]);
  return Polynomial(table, std::move(terms));
}

std::vector<std::size_t> xor_tags(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Gf2Eliminator::Reduction Gf2Eliminator::reduce(const BitVector& v) const {
  if (v.size() != dimension_) throw UsageError("vector dimension does not match eliminator");
  Reduction r{v, {}};
  for (const auto& row : rows_) {
    if (r.residual.test(row.pivot)) {
      r.residual ^= row.bits;
      r.combination = xor_tags(r.combination, row.combination);
    }
  }
  return r;
}

bool Gf2Eliminator::insert(const BitVector& v, std::size_t tag) {
  Reduction r = reduce(v);
  if (r.in_span()) return false;
  r.combination = xor_tags(r.combination, {tag});
  const std::size_t pivot = r.residual.find_first();
  // Keep rows fully reduced so a single pass in reduce() suffices.
  for (auto& row : rows_) {
    if (row.bits.test(pivot)) {
      row.bits ^= r.residual;
      row.combination = xor_tags(row.combination, r.combination);
    }
  }
  rows_.push_back(Row{std::move(r.residual), pivot, std::move(r.combination)});
  return true;
}

}  // namespace invofix
