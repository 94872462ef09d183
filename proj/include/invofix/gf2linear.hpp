#pragma once

// Row reduction over GF(2) with provenance: every pivot remembers which
// inserted vectors were summed to produce it, so membership answers come
// with an explicit linear combination.

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "invofix/gf2core.hpp"

namespace invofix {

using BitVector = boost::dynamic_bitset<>;

// Fixed coordinate system: an ordered list of monomials.
class MonomialBasis {
 public:
  explicit MonomialBasis(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index(const Monomial& m) const;

  // Throws UsageError when p has a term outside the basis.
  BitVector coordinates(const Polynomial& p) const;
  Polynomial polynomial(const BitVector& v, const TablePtr& table) const;

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

class Gf2Eliminator {
 public:
  explicit Gf2Eliminator(std::size_t dimension) : dimension_(dimension) {}

  struct Reduction {
    BitVector residual;
    // Sorted tags of the inserted vectors whose sum equals input - residual.
    std::vector<std::size_t> combination;
    bool in_span() const { return residual.none(); }
  };

  // Returns true when v was independent of the rows inserted so far.
  bool insert(const BitVector& v, std::size_t tag);
  Reduction reduce(const BitVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  struct Row {
    BitVector bits;
    std::size_t pivot;
    std::vector<std::size_t> combination;
  };
  std::size_t dimension_;
  std::vector<Row> rows_;
};

// Sorted symmetric difference of two sorted tag lists.
std::vector<std::size_t> xor_tags(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace invofix
