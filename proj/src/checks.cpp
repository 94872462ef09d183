#include "invofix/checks.hpp"

#include <algorithm>

#include "invofix/binomial.hpp"
#include "invofix/charclass.hpp"
#include "invofix/error.hpp"
#include "invofix/rings.hpp"

namespace invofix {

namespace {

Monomial alpha_d_monomial(int i, int j) {
  const auto& ad = alpha_d_table();
  std::vector<Factor> f;
  if (i > 0) f.push_back(Factor{ad.alpha, static_cast<Exponent>(i)});
  if (j > 0) f.push_back(Factor{ad.d, static_cast<Exponent>(j)});
  return Monomial(std::move(f));
}

Polynomial alpha_d(int i, int j) { return Polynomial::monomial(alpha_d_table().table, alpha_d_monomial(i, j)); }

std::string big(const binomial::BigInt& v) { return v.str(); }

}  // namespace

CheckReport ring_identities_check(int m) {
  CheckReport r = make_report("ring_identities", {{"m", m}}, "bit-row normal form vs term rewriting");
  const RpMuRing ring(m);
  const RpMuPresentation& pres = ring.presentation();
  const Polynomial top = alpha_d(4, m - 5);
  struct Identity {
    Polynomial lhs;
    Polynomial rhs;
  };
  const Identity ids[] = {
      {alpha_d(0, m - 1), top},
      {alpha_d(1, m - 2), Polynomial(alpha_d_table().table)},
      {alpha_d(2, m - 3), Polynomial(alpha_d_table().table)},
      {alpha_d(3, m - 4), top},
  };
  for (const auto& id : ids) {
    const Polynomial fast = ring.normal_form(id.lhs).to_polynomial();
    const Polynomial slow = rewrite_normal_form(id.lhs, pres);
    if (!(fast == slow)) {
      mark(r, Status::fail, to_string(id.lhs) + ": ring " + to_string(fast) + ", rewriting " + to_string(slow));
    } else if (!(fast == id.rhs)) {
      mark(r, Status::paper_mismatch, to_string(id.lhs) + " = " + to_string(fast));
    }
  }
  return r;
}

CheckReport m_number_check(std::int64_t n) {
  CheckReport r = make_report("m_number", {{"n", n}}, "int64 and multiprecision evaluation vs both printed closed forms");
  const binomial::BigInt bn(n);
  const binomial::BigInt value = binomial::stong_pergher(bn);
  if (binomial::BigInt(binomial::stong_pergher(n)) != value) mark(r, Status::fail, "int64 and multiprecision differ");
  const auto forms = binomial::stong_pergher_forms(bn);
  if (forms.product_form != value)
    mark(r, Status::paper_mismatch, "product form " + big(forms.product_form) + ", M(n) = " + big(value));
  if (forms.linear_form != value)
    mark(r, Status::paper_mismatch, "linear form " + big(forms.linear_form) + ", M(n) = " + big(value));
  if (value > (5 * bn + 1) / 2) mark(r, Status::paper_mismatch, "M(n) = " + big(value) + " exceeds ceil(5n/2)");
  return r;
}

CheckReport lucas_items_check(unsigned p, std::int64_t q) {
  CheckReport r = make_report("lucas_items", {{"p", static_cast<std::int64_t>(p)}, {"q", q}},
                              "Lucas digit test on every tabulated binomial");
  const auto report = binomial::paper_tables(p, binomial::BigInt(q));
  std::string vacuous;
  for (const auto& row : report.rows) {
    for (const auto& item : row.items) {
      if (item.status == binomial::ItemStatus::disagree) {
        mark(r, Status::paper_mismatch,
             "i=" + std::to_string(row.i) + " (" + item.label + "): C(" + big(item.top) + "," + big(item.bottom) +
                 ") = " + std::to_string(item.computed) + ", stated " + std::to_string(item.stated));
      } else if (item.status == binomial::ItemStatus::vacuous) {
        if (!vacuous.empty()) vacuous += ",";
        vacuous += "i=" + std::to_string(row.i) + "(" + item.label + ")";
      }
    }
  }
  if (!vacuous.empty()) r.oracle += "; vacuous " + vacuous;
  return r;
}

CheckReport odd_display_check(unsigned p, std::int64_t q) {
  CheckReport r = make_report("odd_display", {{"p", static_cast<std::int64_t>(p)}, {"q", q}},
                              "general five-term coefficients");
  const auto report = binomial::paper_tables(p, binomial::BigInt(q));
  const std::int64_t l = (std::int64_t{1} << p) * q + (std::int64_t{1} << p) - 1;
  const int t = static_cast<int>((std::int64_t{1} << (p + 1)) - 1);
  if (t <= 255) {
    r.oracle += " and the direct series expansion";
    const Polynomial expansion = bracket_f4_expansion(l, t);
    for (int k = 0; k <= kBaseTop; ++k) {
      const bool direct = expansion.contains(alpha_d_monomial(k, t - k));
      if (direct != report.odd_coefficients_general[static_cast<std::size_t>(k)])
        mark(r, Status::fail, "alpha^" + std::to_string(k) + ": expansion " + std::to_string(direct));
    }
  }
  Polynomial printed(alpha_d_table().table);
  Polynomial general(alpha_d_table().table);
  for (int k = 0; k <= kBaseTop; ++k) {
    if (report.odd_coefficients_printed[static_cast<std::size_t>(k)]) printed += alpha_d(k, t - k);
    if (report.odd_coefficients_general[static_cast<std::size_t>(k)]) general += alpha_d(k, t - k);
  }
  if (!(printed == general)) mark(r, Status::paper_mismatch, "printed pairs give " + to_string(printed) + ", computed " + to_string(general));
  return r;
}

CheckReport unique_zero_check(unsigned p, std::int64_t q) {
  CheckReport r = make_report("unique_zero", {{"p", static_cast<std::int64_t>(p)}, {"q", q}},
                              "Lucas digit test on the nine displayed binomials");
  const auto report = binomial::paper_tables(p, binomial::BigInt(q));
  if (!report.unique_zero_holds) {
    r.oracle += "; the claimed zero has negative bottom index";
    return r;
  }
  if (!*report.unique_zero_holds) {
    std::string zeros;
    for (const auto& b : report.odd_display) {
      if (b.computed || b.bottom < 0) continue;
      if (!zeros.empty()) zeros += ", ";
      zeros += b.label + "=C(" + big(b.top) + "," + big(b.bottom) + ")";
    }
    mark(r, Status::paper_mismatch, "zero binomials: " + zeros);
  }
  return r;
}

CheckReport bracket_sweep_check(int m, std::int64_t l_lo, std::int64_t l_hi, int t_max) {
  CheckReport r = make_report("bracket_sweep", {{"l_hi", l_hi}, {"l_lo", l_lo}, {"m", m}, {"t_max", t_max}},
                              "five-term closed form vs series expansion by squaring and inversion");
  const RpMuRing ring(m);
  std::size_t mismatches = 0;
  std::string first;
  for (std::int64_t l = l_lo; l <= l_hi; ++l) {
    for (int t = 0; t <= t_max; ++t) {
      const RpMuElement closed = bracket_f4_closed_form(l, t, ring);
      const RpMuElement direct = ring.normal_form(bracket_f4_expansion(l, t));
      if (!(closed == direct)) {
        if (mismatches++ == 0)
          first = "l=" + std::to_string(l) + " t=" + std::to_string(t) + ": closed " + to_string(closed.to_polynomial()) +
                  ", expansion " + to_string(direct.to_polynomial());
      }
    }
  }
  if (mismatches > 0) mark(r, Status::fail, std::to_string(mismatches) + " mismatches; first " + first);
  return r;
}

CheckReport y_class_check(int n, int m) {
  CheckReport r = make_report("y_class", {{"m", m}, {"n", n}},
                              "product of reduced brackets vs unreduced expansion reduced by term rewriting");
  const RpMuRing ring(m);
  const YClass y = build_Y(n, ring);
  const Polynomial reference = rewrite_normal_form(build_Y_reference(n, ring.presentation()), ring.presentation());
  if (!(reference == y.value.to_polynomial())) {
    mark(r, Status::fail, "ring " + to_string(y.value.to_polynomial()) + ", rewriting " + to_string(reference));
    return r;
  }
  if (!y.printed_agrees()) {
    const std::string printed = y.printed ? to_string(*y.printed) : std::string("none");
    mark(r, Status::paper_mismatch,
         "case " + y.printed_case + ": printed " + printed + ", computed " + to_string(y.value.to_polynomial()));
  }
  return r;
}

CheckReport y_mod_ideal_check(int n, int m) {
  CheckReport r = make_report("y_mod_ideal", {{"m", m}, {"n", n}}, "ground-truth Y with base terms dropped");
  const RpMuRing ring(m);
  const Polynomial reduced = mod_base_ideal(build_Y(n, ring).value.to_polynomial());
  const int mm = static_cast<int>(binomial::stong_pergher(static_cast<std::int64_t>(n - 4)));
  const Polynomial expected = alpha_d(0, mm);
  if (!(reduced == expected)) mark(r, Status::paper_mismatch, "Y mod I = " + to_string(reduced));
  return r;
}

CheckReport w2_family_check(int n, int m) {
  CheckReport r = make_report("w2_family", {{"m", m}, {"n", n}}, "fourth power of the reduced bracket");
  const RpMuRing ring(m);
  const W2Family w = w2_family(n, ring);
  if (!w.agrees)
    mark(r, Status::paper_mismatch, "printed " + to_string(w.printed) + ", computed " + to_string(w.value.to_polynomial()));
  return r;
}

CheckReport x_dimension_check(int n) {
  CheckReport r = make_report("x_dimension", {{"n", n}}, "degree of the X recipe vs M(n-4)");
  const XRecipe recipe = x_recipe(n);
  const std::int64_t mn = binomial::stong_pergher(static_cast<std::int64_t>(n - 4));
  if (recipe.degree() != mn)
    mark(r, Status::paper_mismatch, "deg X = " + std::to_string(recipe.degree()) + ", M(n-4) = " + std::to_string(mn));
  std::int64_t sum_r = 0;
  for (std::size_t i = recipe.low_case ? 1 : 0; i < recipe.factors.size(); ++i) sum_r += recipe.factors[i].r;
  const std::int64_t printed = recipe.low_case
                ? static_cast<std::int64_t>(recipe.factors.front().multiplicity) * recipe.factors.front().degree + sum_r
                : 2 * sum_r;
  if (printed != recipe.degree())
    mark(r, Status::paper_mismatch,
         "printed dimension sum " + std::to_string(printed) + ", deg X = " + std::to_string(recipe.degree()));
  return r;
}

std::string name(XExtra e) {
  switch (e) {
    case XExtra::w0_2_fourth:
      return "W[0]_2^4";
    case XExtra::omega1:
      return "omega1";
    case XExtra::omega2:
      return "omega2";
    case XExtra::omega3:
      return "omega3";
    case XExtra::omega4:
      return "omega4";
    case XExtra::omega5:
      return "omega5";
  }
  return "";
}

CheckReport x_side_check(int n, XExtra extra) {
  if (n < 6 || n % 2 != 0) throw UsageError("x_side_check needs even n >= 6");
  int cap = 8;
  for (const auto& f : x_recipe(n).factors) cap = std::max(cap, f.degree);
  const auto side = fn_side(cap, 6, 6);
  Polynomial value(side->table);
  if (extra == XExtra::w0_2_fourth) {
    value = pow(bracket_fn(*side, 0, 2, n), 4);
  } else {
    value = f_omega_raw(kPartitions4[static_cast<std::size_t>(extra) - 1], lambda_roots(*side));
  }
  return x_side_vanishing(*side, n, value, name(extra));
}

}  // namespace invofix
