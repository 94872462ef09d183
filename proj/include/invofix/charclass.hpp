#pragma once

// Stiefel-Whitney classes of projectivizations and the W[r] family on both
// fixed components, the classes X and Y, and the characteristic numbers
// built from them.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invofix/gf2core.hpp"
#include "invofix/report.hpp"
#include "invofix/rings.hpp"

namespace invofix {

// Generators on the F^n side: theta_a = w_a(F^n) and u_b = w_b(eta) for
// 1 <= a, b <= degree_cap, the line class c, and optional splitting roots
// x_1..x_N of W(F^n) and y_1..y_M of W(eta).
struct FnSide {
  TablePtr table;
  int degree_cap = 0;
  std::vector<GenId> theta;  // theta[a] for a >= 1; index 0 unused
  std::vector<GenId> u;
  GenId c = 0;
  std::vector<GenId> x;  // x[0] is x_1
  std::vector<GenId> y;

  Polynomial theta_poly(int a) const;  // 1 for a = 0, 0 for a > degree_cap
  Polynomial u_poly(int b) const;
  Polynomial c_poly(Exponent e = 1) const;
};

// Shared, immutable; identical arguments return the same table.
std::shared_ptr<const FnSide> fn_side(int degree_cap, int x_roots = 0, int y_roots = 0);

// A total class truncated above `cap`.
struct TotalClass {
  Polynomial total;
  int cap = 0;
  Polynomial component(int j) const { return invofix::component(total, j); }
};

// W(base) * sum_b w_b(bundle) (1+line)^{fiber_rank-b}, truncated at cap.
TotalClass projectivization_class(const TotalClass& base, const TotalClass& bundle, int fiber_rank,
                                  GenId line, int cap);

// Degree-j part of W(F^n) * sum_b u_b (1+c)^{r-b}; terms of base degree > n
// are dropped. Requires j <= side.degree_cap.
Polynomial bracket_fn(const FnSide& side, std::int64_t r, int j, int n);
TotalClass bracket_fn_total(const FnSide& side, std::int64_t r, int n);

// Degree-t part of (1+alpha+alpha^4) sum_{b<4} alpha^b (1+d)^{l-b} in
// Z2[alpha,d]/alpha^5, with (1+d)^s for s < 0 taken as a power series.
// Computed by repeated squaring and series inversion, without binomials.
Polynomial bracket_f4_expansion(std::int64_t l, int t);
// The five-coefficient closed form with Lucas parities, reduced.
RpMuElement bracket_f4_closed_form(std::int64_t l, int t, const RpMuRing& ring);
// Reduced expansion; throws OracleMismatch if it differs from the closed form.
RpMuElement bracket_f4(std::int64_t l, int t, const RpMuRing& ring);

// ------------------------------------------------------------------ X and Y

struct XFactor {
  std::int64_t r = 0;
  int degree = 0;  // the component W[r]_degree
  unsigned multiplicity = 1;
};

struct XRecipe {
  int n = 0;
  unsigned p = 0;
  std::int64_t q = 1;
  bool low_case = true;  // p <= q
  std::vector<XFactor> factors;
  int degree() const;
};

// Throws UsageError unless n >= 5.
XRecipe x_recipe(int n);

struct XClass {
  XRecipe recipe;
  Polynomial value;
  int degree = 0;
  int max_c_power = 0;
  int min_base_degree = 0;
  // The printed dimension sum counts each r_i once instead of 2 r_i.
  std::int64_t printed_dimension = 0;
};

// Terms of base degree above base_cap are dropped during the product
// (defaults to n, where they vanish anyway).
XClass build_X(int n, std::optional<int> base_cap = std::nullopt);

struct YClass {
  RpMuElement value;                     // product of reduced brackets
  std::optional<Polynomial> printed;     // the printed closed form, if one applies
  std::string printed_case;
  std::optional<RpMuElement> printed_reduced;
  bool printed_agrees() const { return printed_reduced && *printed_reduced == value; }
};

// Requires ring.presentation().m() > M(n-4) + 8.
YClass build_Y(int n, const RpMuRing& ring);

// Y computed the slow way: unreduced bracket expansions multiplied as
// polynomials, then rewrite_normal_form.
Polynomial build_Y_reference(int n, const RpMuPresentation& pres);

// --------------------------------------------------------------- the checks

CheckReport power_identity_check(std::int64_t t, std::int64_t s);

// W[n-4]_2^4 and the printed two-case value.
struct W2Family {
  RpMuElement value;
  Polynomial printed;
  bool agrees = false;
};
W2Family w2_family(int n, const RpMuRing& ring);

struct FinalNumber {
  bool value = false;
  RpMuElement product;  // Y * W[n-4]_2^4 * d^{m-1-(M(n-4)+8)}, reduced
  CheckReport report;
};
// n even >= 6, m > M(n-4) + 8.
FinalNumber final_even_number(int n, int m);

// n odd >= 5, m >= n + 4.
bool odd_case_number(int n, int m);
CheckReport odd_case_check(int n, int m);

// The F^n class paired with the extra factors: X for even n and
// W[0]_1^{n+3} for odd n, as a list of (factor, multiplicity).
std::vector<std::pair<Polynomial, unsigned>> x_side_factors(const FnSide& side, int n);

// Confirms every term of (class) * extra has base degree >= n + 1. `extra`
// must live on `side`, whose degree cap must cover the factors of X.
CheckReport x_side_vanishing(const FnSide& side, int n, const Polynomial& extra, const std::string& extra_label);

}  // namespace invofix
