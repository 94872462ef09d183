#pragma once

// The cohomology ring of RP(mu), mu = 3xi + (m-7)eps over RP^4, as a free
// module over Z2[alpha]/alpha^5 on 1, d, ..., d^{m-5}, subject to
// d^{m-4} = alpha d^{m-5} + alpha^2 d^{m-6} + alpha^3 d^{m-7}.

#include <array>
#include <cstdint>

#include "invofix/gf2core.hpp"
#include "invofix/gf2linear.hpp"

namespace invofix {

// Shared generator table holding alpha (BASE, degree 1) and d (FIBER, degree 1).
struct AlphaDTable {
  TablePtr table;
  GenId alpha;
  GenId d;
};
const AlphaDTable& alpha_d_table();

inline constexpr int kBaseTop = 4;

class RpMuPresentation {
 public:
  // Throws UsageError when m < kMinM.
  explicit RpMuPresentation(int m);

  static constexpr int kMinM = 8;

  int m() const { return m_; }
  int fiber_rank() const { return m_ - 4; }  // d-exponents range over 0..fiber_rank()-1
  int top_degree() const { return m_ - 1; }

  bool operator==(const RpMuPresentation&) const = default;

 private:
  int m_;
};

// Normal-form element: one bit row per alpha power, bit j of row i is the
// coefficient of alpha^i d^j.
class RpMuElement {
 public:
  explicit RpMuElement(const RpMuPresentation& pres);

  const RpMuPresentation& presentation() const { return pres_; }
  bool coefficient(int i, int j) const;
  void flip(int i, int j);
  const BitVector& row(int i) const { return rows_[i]; }
  bool is_zero() const;

  // Components of degree != t cleared.
  RpMuElement component(int t) const;

  RpMuElement& operator+=(const RpMuElement& other);
  friend RpMuElement operator+(RpMuElement a, const RpMuElement& b) { return a += b; }
  friend bool operator==(const RpMuElement& a, const RpMuElement& b);

  Polynomial to_polynomial() const;

 private:
  friend class RpMuRing;
  RpMuPresentation pres_;
  std::array<BitVector, kBaseTop + 1> rows_;
};

class RpMuRing {
 public:
  explicit RpMuRing(RpMuPresentation pres) : pres_(pres) {}
  explicit RpMuRing(int m) : pres_(m) {}

  const RpMuPresentation& presentation() const { return pres_; }

  // Throws UsageError when p mentions a generator other than alpha and d.
  RpMuElement normal_form(const Polynomial& p) const;

  RpMuElement zero() const { return RpMuElement(pres_); }
  RpMuElement one() const { return basis(0, 0); }
  // alpha^i d^j, reduced; zero when i > 4 or i + j > m - 1.
  RpMuElement basis(int i, int j) const;

  RpMuElement mul(const RpMuElement& a, const RpMuElement& b) const;
  RpMuElement pow(const RpMuElement& a, std::uint64_t e) const;

  // Coefficient of alpha^4 d^{m-5}: evaluation on the fundamental class.
  static bool top_coefficient(const RpMuElement& e);

 private:
  // Applies the d-relation to rows of arbitrary length, top exponent first,
  // and returns rows of width fiber_rank().
  RpMuElement reduce(std::array<BitVector, kBaseTop + 1> rows) const;

  RpMuPresentation pres_;
};

// Term-at-a-time rewriting on the polynomial form: applies alpha^5 = 0 and
// the d-relation to the highest d-power until nothing applies. Slow, but
// shares no code with RpMuRing and serves as its reference.
Polynomial rewrite_normal_form(const Polynomial& p, const RpMuPresentation& pres);

// Drops every term that contains a BASE generator of positive degree.
Polynomial mod_base_ideal(const Polynomial& p);

}  // namespace invofix
