#include "invofix/charclass.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "invofix/binomial.hpp"
#include "invofix/error.hpp"

namespace invofix {

namespace {

using binomial::parity;

std::int64_t pow2(unsigned k) { return std::int64_t{1} << k; }

std::int64_t M(int n) { return binomial::stong_pergher(static_cast<std::int64_t>(n)); }

Polynomial alpha_d(int i, std::int64_t j) {
  const auto& ad = alpha_d_table();
  if (j < 0) return Polynomial(ad.table);
  return Polynomial::monomial(
      ad.table, Monomial({Factor{ad.alpha, static_cast<Exponent>(i)}, Factor{ad.d, static_cast<Exponent>(j)}}));
}

Polynomial drop_alpha_above_4(const Polynomial& p) {
  const GenId alpha = alpha_d_table().alpha;
  return filter(p, [&](const Monomial& m) { return m.exponent(alpha) <= kBaseTop; });
}

// Dense truncated power series in one variable over GF(2).
using Series = std::vector<std::uint8_t>;

Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] ^= b[j];
  }
  return out;
}

// (1+d)^s modulo d^{len}.
Series one_plus_d_power(std::int64_t s, std::size_t len) {
  Series result(len, 0);
  if (len == 0) return result;
  result[0] = 1;
  Series base(len, 0);
  base[0] = 1;
  if (len > 1) base[1] = 1;
  auto e = static_cast<std::uint64_t>(s < 0 ? -s : s);
  while (e > 0) {
    if (e & 1U) result = series_mul(result, base);
    e >>= 1U;
    if (e > 0) base = series_mul(base, base);
  }
  if (s >= 0) return result;
  // Invert: g_0 = 1, g_k = sum_{i=1..k} f_i g_{k-i}.
  Series inverse(len, 0);
  inverse[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    std::uint8_t acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc ^= result[i] & inverse[k - i];
    inverse[k] = acc;
  }
  return inverse;
}

}  // namespace

// ------------------------------------------------------------------ FnSide

Polynomial FnSide::theta_poly(int a) const {
  if (a == 0) return Polynomial::one(table);
  if (a < 0 || a > degree_cap) return Polynomial(table);
  return Polynomial::gen(table, theta[a]);
}

Polynomial FnSide::u_poly(int b) const {
  if (b == 0) return Polynomial::one(table);
  if (b < 0 || b > degree_cap) return Polynomial(table);
  return Polynomial::gen(table, u[b]);
}

Polynomial FnSide::c_poly(Exponent e) const { return Polynomial::gen(table, c, e); }

std::shared_ptr<const FnSide> fn_side(int degree_cap, int x_roots, int y_roots) {
  if (degree_cap < 1 || x_roots < 0 || y_roots < 0) throw UsageError("fn_side: invalid sizes");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const FnSide>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[{degree_cap, x_roots, y_roots}];
  if (slot) return slot;

  auto table = std::make_shared<GeneratorTable>();
  auto side = std::make_shared<FnSide>();
  side->degree_cap = degree_cap;
  side->theta.assign(1, 0);
  side->u.assign(1, 0);
  for (int a = 1; a <= degree_cap; ++a) side->theta.push_back(table->add("theta_" + std::to_string(a), a, Stratum::base));
  for (int b = 1; b <= degree_cap; ++b) side->u.push_back(table->add("u_" + std::to_string(b), b, Stratum::base));
  side->c = table->add("c", 1, Stratum::fiber);
  for (int i = 1; i <= x_roots; ++i) side->x.push_back(table->add("x_" + std::to_string(i), 1, Stratum::base));
  for (int j = 1; j <= y_roots; ++j) side->y.push_back(table->add("y_" + std::to_string(j), 1, Stratum::base));
  side->table = std::move(table);
  slot = std::move(side);
  return slot;
}

// -------------------------------------------------------------- total classes

TotalClass projectivization_class(const TotalClass& base, const TotalClass& bundle, int fiber_rank,
                                  GenId line, int cap) {
  require_same_table(base.total, bundle.total);
  if (max_degree(bundle.total) > fiber_rank) throw UsageError("bundle class exceeds the fiber rank");
  const auto& table = base.total.table();
  const MulOptions opts{kInfiniteDegree, cap};
  const Polynomial one_plus_line = Polynomial::one(table) + Polynomial::gen(table, line);
  Polynomial sum(table);
  for (int b = 0; b <= std::min(fiber_rank, cap); ++b) {
    const Polynomial wb = bundle.component(b);
    if (wb.is_zero()) continue;
    sum += mul(wb, pow(one_plus_line, static_cast<std::uint64_t>(fiber_rank - b), opts), opts);
  }
  return TotalClass{mul(truncate_degree(base.total, cap), sum, opts), cap};
}

Polynomial bracket_fn(const FnSide& side, std::int64_t r, int j, int n) {
  if (j < 0) return Polynomial(side.table);
  if (j > side.degree_cap) throw UsageError("bracket_fn: degree " + std::to_string(j) + " exceeds the generator cap");
  std::vector<Monomial> terms;
  for (int a = 0; a <= j; ++a) {
    for (int b = 0; a + b <= j; ++b) {
      if (a + b > n) continue;
      const int e = j - a - b;
      if (!parity(r - b, e)) continue;
      std::vector<Factor> f;
      if (a > 0) f.push_back(Factor{side.theta[a], 1});
      if (b > 0) f.push_back(Factor{side.u[b], 1});
      if (e > 0) f.push_back(Factor{side.c, static_cast<Exponent>(e)});
      terms.emplace_back(std::move(f));
    }
  }
  return Polynomial(side.table, std::move(terms));
}

TotalClass bracket_fn_total(const FnSide& side, std::int64_t r, int n) {
  Polynomial total(side.table);
  for (int j = 0; j <= side.degree_cap; ++j) total += bracket_fn(side, r, j, n);
  return TotalClass{std::move(total), side.degree_cap};
}

// ------------------------------------------------------------------ W[l] on F^4

Polynomial bracket_f4_expansion(std::int64_t l, int t) {
  const auto& ad = alpha_d_table();
  if (t < 0) return Polynomial(ad.table);
  const auto len = static_cast<std::size_t>(t) + 1;
  Polynomial sum(ad.table);
  for (int b = 0; b <= 3; ++b) {
    const Series s = one_plus_d_power(l - b, len);
    std::vector<Monomial> terms;
    for (std::size_t e = 0; e < len; ++e) {
      if (s[e]) terms.push_back(Monomial({Factor{ad.alpha, static_cast<Exponent>(b)}, Factor{ad.d, static_cast<Exponent>(e)}}));
    }
    sum += Polynomial(ad.table, std::move(terms));
  }
  const Polynomial unit = alpha_d(0, 0) + alpha_d(1, 0) + alpha_d(4, 0);
  return drop_alpha_above_4(component(mul_serial(unit, sum, MulOptions{kInfiniteDegree, t}), t));
}

RpMuElement bracket_f4_closed_form(std::int64_t l, int t, const RpMuRing& ring) {
  const std::array<bool, 5> coeff{
      parity(l, t),
      parity(l - 1, t - 1) != parity(l, t - 1),
      parity(l - 2, t - 2) != parity(l - 1, t - 2),
      parity(l - 3, t - 3) != parity(l - 2, t - 3),
      parity(l - 3, t - 4) != parity(l, t - 4),
  };
  const auto& ad = alpha_d_table();
  Polynomial p(ad.table);
  for (int k = 0; k <= kBaseTop; ++k) {
    if (coeff[k] && t - k >= 0) p += alpha_d(k, t - k);
  }
  return ring.normal_form(p);
}

RpMuElement bracket_f4(std::int64_t l, int t, const RpMuRing& ring) {
  RpMuElement direct = ring.normal_form(bracket_f4_expansion(l, t));
  const RpMuElement closed = bracket_f4_closed_form(l, t, ring);
  if (!(direct == closed)) {
    throw OracleMismatch("bracket_f4(" + std::to_string(l) + ", " + std::to_string(t) + ") with m = " +
                         std::to_string(ring.presentation().m()) + ": expansion " + to_string(direct.to_polynomial()) +
                         " vs closed form " + to_string(closed.to_polynomial()));
  }
  return direct;
}

// ------------------------------------------------------------------ X and Y

int XRecipe::degree() const {
  int total = 0;
  for (const auto& f : factors) total += f.degree * static_cast<int>(f.multiplicity);
  return total;
}

XRecipe x_recipe(int n) {
  if (n < 5) throw UsageError("X needs n >= 5, got " + std::to_string(n));
  const auto ta = binomial::two_adic(binomial::BigInt(n - 4));
  XRecipe recipe;
  recipe.n = n;
  recipe.p = ta.p;
  recipe.q = static_cast<std::int64_t>(ta.q);
  const std::int64_t p = recipe.p;
  const std::int64_t q = recipe.q;
  recipe.low_case = p <= q;

  auto product_factors = [&](std::int64_t count) {
    std::vector<XFactor> out;
    for (std::int64_t i = 1; i <= count; ++i) {
      const std::int64_t r = pow2(recipe.p) - pow2(static_cast<unsigned>(p - i));
      out.push_back(XFactor{r, static_cast<int>(2 * r), 1});
    }
    return out;
  };
  auto low_factors = [&] {
    std::vector<XFactor> out;
    const std::int64_t exponent = q + 1 - p;
    if (exponent > 0) {
      const std::int64_t r = pow2(recipe.p) - 1;
      out.push_back(XFactor{r, static_cast<int>(2 * r + 1), static_cast<unsigned>(exponent)});
    }
    for (const auto& f : product_factors(p)) out.push_back(f);
    return out;
  };

  if (recipe.low_case) {
    recipe.factors = low_factors();
  } else {
    recipe.factors = product_factors(q + 1);
    if (p == q + 1) {
      const auto other = low_factors();
      const bool same = other.size() == recipe.factors.size() &&
                        std::equal(other.begin(), other.end(), recipe.factors.begin(), [](const XFactor& a, const XFactor& b) {
                          return a.r == b.r && a.degree == b.degree && a.multiplicity == b.multiplicity;
                        });
      if (!same) throw OracleMismatch("the two X recipes differ at p = q + 1, n = " + std::to_string(n));
    }
  }
  return recipe;
}

namespace {

int max_factor_degree(const XRecipe& recipe) {
  int d = 1;
  for (const auto& f : recipe.factors) d = std::max(d, f.degree);
  return d;
}

}  // namespace

XClass build_X(int n, std::optional<int> base_cap) {
  XRecipe recipe = x_recipe(n);
  const auto side = fn_side(max_factor_degree(recipe));
  const MulOptions opts{base_cap.value_or(n), kInfiniteDegree};
  Polynomial value = Polynomial::one(side->table);
  for (const auto& f : recipe.factors) {
    value = mul(value, pow(bracket_fn(*side, f.r, f.degree, n), f.multiplicity, opts), opts);
  }
  XClass x{std::move(recipe), std::move(value)};
  x.degree = x.recipe.degree();
  if (!x.value.is_zero() && (!is_homogeneous(x.value) || max_degree(x.value) != x.degree))
    throw OracleMismatch("X is not homogeneous of its recipe degree");
  x.max_c_power = x.value.is_zero() ? 0 : static_cast<int>(max_exponent(x.value, side->c));
  x.min_base_degree = min_base_degree(x.value);

  const std::int64_t p = x.recipe.p;
  const std::int64_t q = x.recipe.q;
  std::int64_t sum_r = 0;
  for (const auto& f : x.recipe.factors) {
    if (f.degree == 2 * f.r) sum_r += f.r;
  }
  x.printed_dimension = x.recipe.low_case ? (q + 1 - p) * (pow2(x.recipe.p + 1) - 1) + sum_r : 2 * sum_r;
  return x;
}

namespace {

void require_large_m(int n, int m) {
  if (m <= M(n - 4) + 8) {
    throw UsageError("m = " + std::to_string(m) + " must exceed M(n-4)+8 = " + std::to_string(M(n - 4) + 8) +
                     " for n = " + std::to_string(n));
  }
}

}  // namespace

YClass build_Y(int n, const RpMuRing& ring) {
  require_large_m(n, ring.presentation().m());
  const XRecipe recipe = x_recipe(n);
  YClass y{ring.one(), std::nullopt, "", std::nullopt};
  for (const auto& f : recipe.factors) {
    y.value = ring.mul(y.value, ring.pow(bracket_f4(n - 4 + f.r, f.degree, ring), f.multiplicity));
  }

  if (recipe.p == 0) return y;
  const std::int64_t mm = M(n - 4);
  const std::int64_t p = recipe.p;
  const std::int64_t q = recipe.q;
  Polynomial printed = alpha_d(0, mm);
  if (p <= q + 1) {
    printed += alpha_d(1, mm - 1) + alpha_d(3, mm - 3);
    if (p % 2 == 0) {
      printed += alpha_d(4, mm - 4);
      y.printed_case = "p<=q+1, p even";
    } else {
      y.printed_case = "p<=q+1, p odd";
    }
  } else {
    const std::int64_t gap = p - (q + 1);
    // Printed with alpha^4 d^M, not alpha^4 d^{M-4}; compared as printed.
    if (gap == 1) {
      printed += alpha_d(3, mm - 3) + alpha_d(4, mm);
      y.printed_case = "p-(q+1)=1";
    } else if (gap == 2) {
      printed += alpha_d(4, mm);
      y.printed_case = "p-(q+1)=2";
    } else {
      y.printed_case = "p-(q+1)>2";
    }
  }
  y.printed_reduced = ring.normal_form(printed);
  y.printed = std::move(printed);
  return y;
}

namespace {

Polynomial alpha_truncated_mul(const Polynomial& a, const Polynomial& b) { return drop_alpha_above_4(mul_serial(a, b)); }

Polynomial alpha_truncated_pow(const Polynomial& a, std::uint64_t e) {
  Polynomial out = alpha_d(0, 0);
  for (std::uint64_t i = 0; i < e; ++i) out = alpha_truncated_mul(out, a);
  return out;
}

}  // namespace

Polynomial build_Y_reference(int n, const RpMuPresentation& pres) {
  require_large_m(n, pres.m());
  Polynomial y = alpha_d(0, 0);
  for (const auto& f : x_recipe(n).factors) {
    y = alpha_truncated_mul(y, alpha_truncated_pow(bracket_f4_expansion(n - 4 + f.r, f.degree), f.multiplicity));
  }
  return rewrite_normal_form(y, pres);
}

// --------------------------------------------------------------- the checks

CheckReport power_identity_check(std::int64_t t, std::int64_t s) {
  if (t < 3 || s < 0) throw UsageError("power_identity_check needs t >= 3 and s >= 0");
  CheckReport r = make_report("power_identity", {{"s", s}, {"t", t}},
                              "square-and-multiply in Z2[alpha,d]/alpha^5 against d^{ts} + s alpha^4 d^{ts-3}");
  const Polynomial base = alpha_d(0, t) + alpha_d(4, t - 3);
  Polynomial value = alpha_d(0, 0);
  Polynomial sq = base;
  for (auto e = static_cast<std::uint64_t>(s); e > 0; e >>= 1U) {
    if (e & 1U) value = drop_alpha_above_4(mul(value, sq));
    sq = drop_alpha_above_4(mul(sq, sq));
  }
  Polynomial expected = alpha_d(0, t * s);
  if (s % 2 == 1) expected += alpha_d(4, t * s - 3);
  // Term-by-term reference.
  const Polynomial slow = alpha_truncated_pow(base, static_cast<std::uint64_t>(s));
  if (!(slow == value)) {
    mark(r, Status::fail, "square-and-multiply " + to_string(value) + " vs repeated product " + to_string(slow));
  } else if (!(value == expected)) {
    mark(r, Status::paper_mismatch, to_string(value));
  }
  return r;
}

W2Family w2_family(int n, const RpMuRing& ring) {
  if (n < 6 || n % 2 != 0) throw UsageError("w2_family needs even n >= 6");
  const auto ta = binomial::two_adic(binomial::BigInt(n - 4));
  W2Family out{ring.pow(bracket_f4(n - 4, 2, ring), 4), Polynomial(alpha_d_table().table), false};
  out.printed = alpha_d(4, 4);
  if (ta.p == 1) out.printed += alpha_d(0, 8);
  out.agrees = ring.normal_form(out.printed) == out.value;
  return out;
}

FinalNumber final_even_number(int n, int m) {
  if (n < 6 || n % 2 != 0) throw UsageError("final_even_number needs even n >= 6");
  require_large_m(n, m);
  const RpMuRing ring(m);
  const std::int64_t mm = M(n - 4);
  const std::int64_t shift = m - 1 - (mm + 8);

  const YClass y = build_Y(n, ring);
  const W2Family w = w2_family(n, ring);
  FinalNumber out{false, ring.mul(ring.mul(y.value, w.value), ring.basis(0, static_cast<int>(shift))),
                  make_report("final_even_number", {{"m", m}, {"n", n}},
                              "bit-row ring product vs polynomial expansion reduced by term rewriting")};
  out.value = RpMuRing::top_coefficient(out.product);

  const Polynomial w_ref = alpha_truncated_pow(bracket_f4_expansion(n - 4, 2), 4);
  Polynomial ref = alpha_truncated_mul(alpha_truncated_mul(build_Y_reference(n, ring.presentation()), w_ref), alpha_d(0, shift));
  ref = rewrite_normal_form(ref, ring.presentation());
  if (!(ref == out.product.to_polynomial())) {
    mark(out.report, Status::fail, "ring " + to_string(out.product.to_polynomial()) + " vs rewriting " + to_string(ref));
  } else if (!out.value) {
    mark(out.report, Status::paper_mismatch,
         "Y = " + to_string(y.value.to_polynomial()) + "; product = " + to_string(out.product.to_polynomial()));
  }
  return out;
}

bool odd_case_number(int n, int m) {
  if (n < 5 || n % 2 == 0) throw UsageError("odd_case_number needs odd n >= 5");
  if (m < n + 4) throw UsageError("odd_case_number needs m >= n + 4");
  const RpMuRing ring(m);
  const RpMuElement w1 = bracket_f4(n - 4, 1, ring);
  return RpMuRing::top_coefficient(ring.mul(ring.pow(w1, static_cast<std::uint64_t>(n + 3)), ring.basis(0, m - 1 - (n + 3))));
}

CheckReport odd_case_check(int n, int m) {
  CheckReport r = make_report("odd_case_number", {{"m", m}, {"n", n}},
                              "bit-row ring power vs polynomial expansion reduced by term rewriting");
  const bool value = odd_case_number(n, m);
  const RpMuPresentation pres(m);
  Polynomial ref = alpha_truncated_mul(alpha_truncated_pow(bracket_f4_expansion(n - 4, 1), static_cast<std::uint64_t>(n + 3)),
                                       alpha_d(0, m - 1 - (n + 3)));
  ref = rewrite_normal_form(ref, pres);
  const bool ref_value = ref.contains(Monomial({Factor{alpha_d_table().alpha, kBaseTop},
                                               Factor{alpha_d_table().d, static_cast<Exponent>(m - 5)}}));
  if (value != ref_value) {
    mark(r, Status::fail, "ring gives " + std::to_string(value) + ", rewriting gives " + to_string(ref));
  } else if (!value) {
    mark(r, Status::paper_mismatch, to_string(ref));
  }
  return r;
}

std::vector<std::pair<Polynomial, unsigned>> x_side_factors(const FnSide& side, int n) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (n % 2 != 0) {
    out.emplace_back(bracket_fn(side, 0, 1, n), static_cast<unsigned>(n + 3));
    return out;
  }
  for (const auto& f : x_recipe(n).factors) out.emplace_back(bracket_fn(side, f.r, f.degree, n), f.multiplicity);
  return out;
}

CheckReport x_side_vanishing(const FnSide& side, int n, const Polynomial& extra, const std::string& extra_label) {
  if (extra.table() != side.table) throw UsageError("x_side_vanishing: extra class lives on another table");
  CheckReport r = make_report("x_side_vanishing", {{"extra", extra_label}, {"n", n}},
                              "minimal base degrees add in the polynomial ring; confirmed by the base-capped product");
  const auto factors = x_side_factors(side, n);
  int class_min = 0;
  for (const auto& [f, mult] : factors) {
    const int b = min_base_degree(f);
    class_min = (b == kInfiniteDegree || class_min == kInfiniteDegree) ? kInfiniteDegree : class_min + b * static_cast<int>(mult);
  }
  const int extra_min = min_base_degree(extra);
  const bool predicted_zero = class_min == kInfiniteDegree || extra_min == kInfiniteDegree || class_min + extra_min > n;

  // Every term of base degree <= n in the product comes from class terms of
  // base degree <= n - extra_min.
  Polynomial product(side.table);
  if (extra_min != kInfiniteDegree && n - extra_min >= 0) {
    const MulOptions opts{n - extra_min, kInfiniteDegree};
    Polynomial cls = Polynomial::one(side.table);
    for (const auto& [f, mult] : factors) cls = mul(cls, pow(f, mult, opts), opts);
    product = mul(cls, extra, MulOptions{n, kInfiniteDegree});
  }
  if (product.is_zero() != predicted_zero) {
    mark(r, Status::fail,
         "capped product " + std::string(product.is_zero() ? "vanishes" : "survives") + " but minimal base degrees sum to " +
             std::to_string(class_min) + " + " + std::to_string(extra_min));
  } else if (!predicted_zero) {
    const int low = min_base_degree(product);
    const Polynomial lowest = filter(product, [&](const Monomial& m) { return m.base_degree(*side.table) == low; });
    mark(r, Status::paper_mismatch, "base degree " + std::to_string(low) + ": " + to_string(lowest));
  }
  return r;
}

}  // namespace invofix
