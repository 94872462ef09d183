#include "invofix/symmfunc.hpp"

#include <algorithm>
#include <functional>

#include "invofix/error.hpp"

namespace invofix {

std::vector<int> parts(Partition4 w) {
  switch (w) {
    case Partition4::omega1:
      return {1, 1, 1, 1};
    case Partition4::omega2:
      return {2, 1, 1};
    case Partition4::omega3:
      return {2, 2};
    case Partition4::omega4:
      return {3, 1};
    case Partition4::omega5:
      return {4};
  }
  throw UsageError("unknown partition");
}

int index(Partition4 w) { return static_cast<int>(w) + 1; }

std::string name(Partition4 w) { return "omega" + std::to_string(index(w)); }

std::vector<Polynomial> RootSystem::tangent_roots() const {
  std::vector<Polynomial> out;
  for (GenId x : base_roots) out.push_back(Polynomial::gen(table, x));
  const Polynomial line_poly = Polynomial::gen(table, line);
  for (GenId y : fiber_roots) out.push_back(line_poly + Polynomial::gen(table, y));
  for (int i = 0; i < pure_line_roots; ++i) out.push_back(line_poly);
  return out;
}

const NuSide& nu_side() {
  static const NuSide instance = [] {
    auto table = std::make_shared<GeneratorTable>();
    NuSide s;
    for (int i = 1; i <= 4; ++i) s.x.push_back(table->add("x_" + std::to_string(i), 1, Stratum::base));
    for (int j = 1; j <= 4; ++j) s.y.push_back(table->add("y_" + std::to_string(j), 1, Stratum::base));
    s.d = table->add("d", 1, Stratum::fiber);
    for (int k = 1; k <= 8; ++k) s.sigma.push_back(table->add("sigma_" + std::to_string(k), k, Stratum::base));
    s.table = std::move(table);
    return s;
  }();
  return instance;
}

RootSystem NuSide::roots(int pure_line_roots) const { return RootSystem{table, x, y, d, pure_line_roots}; }

std::vector<GenId> NuSide::all_roots() const {
  std::vector<GenId> out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

RootSystem lambda_roots(const FnSide& side) { return RootSystem{side.table, side.x, side.y, side.c, 0}; }

namespace {

// Calls visit(chosen) for every assignment of the parts of lambda (sorted
// descending) to distinct indices in [0, count), counting assignments that
// differ only by permuting equal parts once.
void for_each_placement(const std::vector<int>& lambda, std::size_t count,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen(lambda.size());
  std::vector<bool> used(count, false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == lambda.size()) {
      visit(chosen);
      return;
    }
    const std::size_t start = (k > 0 && lambda[k] == lambda[k - 1]) ? chosen[k - 1] + 1 : 0;
    for (std::size_t v = start; v < count; ++v) {
      if (used[v]) continue;
      used[v] = true;
      chosen[k] = v;
      rec(k + 1);
      used[v] = false;
    }
  };
  rec(0);
}

std::vector<int> sorted_desc(std::vector<int> lambda) {
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda;
}

}  // namespace

Polynomial monomial_symmetric(const std::vector<int>& lambda, const TablePtr& table, const std::vector<GenId>& vars) {
  const auto parts_desc = sorted_desc(lambda);
  std::vector<Monomial> terms;
  for_each_placement(parts_desc, vars.size(), [&](const std::vector<std::size_t>& chosen) {
    std::vector<Factor> f;
    for (std::size_t k = 0; k < chosen.size(); ++k) f.push_back(Factor{vars[chosen[k]], static_cast<Exponent>(parts_desc[k])});
    terms.emplace_back(std::move(f));
  });
  return Polynomial(table, std::move(terms));
}

Polynomial elementary(int k, const TablePtr& table, const std::vector<GenId>& vars) {
  if (k == 0) return Polynomial::one(table);
  return monomial_symmetric(std::vector<int>(static_cast<std::size_t>(k), 1), table, vars);
}

Polynomial f_omega_raw(Partition4 w, const RootSystem& roots) {
  const auto lambda = sorted_desc(parts(w));
  const auto z = roots.tangent_roots();
  const Polynomial line = Polynomial::gen(roots.table, roots.line);
  // q(z) = z (line + z) and its powers up to 4.
  std::vector<std::array<Polynomial, 5>> qpow;
  for (const auto& zi : z) {
    const Polynomial q = zi * (line + zi);
    qpow.push_back({Polynomial::one(roots.table), q, pow(q, 2), pow(q, 3), pow(q, 4)});
  }
  Polynomial sum(roots.table);
  for_each_placement(lambda, z.size(), [&](const std::vector<std::size_t>& chosen) {
    Polynomial term = Polynomial::one(roots.table);
    for (std::size_t k = 0; k < chosen.size(); ++k) term = mul_serial(term, qpow[chosen[k]][lambda[k]]);
    sum += term;
  });
  return sum;
}

namespace {

Polynomial swap_generators(const Polynomial& p, GenId a, GenId b) {
  std::vector<Monomial> terms;
  terms.reserve(p.size());
  for (const auto& m : p.terms()) {
    std::vector<Factor> f(m.factors().begin(), m.factors().end());
    for (auto& factor : f) {
      if (factor.gen == a) {
        factor.gen = b;
      } else if (factor.gen == b) {
        factor.gen = a;
      }
    }
    terms.emplace_back(std::move(f));
  }
  return Polynomial(p.table(), std::move(terms));
}

}  // namespace

Polynomial expand_elementary(const Polynomial& p, const std::vector<GenId>& roots, const std::vector<GenId>& sigma) {
  const auto& table = p.table();
  std::vector<Polynomial> e;
  for (std::size_t k = 1; k <= sigma.size(); ++k) e.push_back(elementary(static_cast<int>(k), table, roots));
  Polynomial out(table);
  for (const auto& m : p.terms()) {
    Polynomial term = Polynomial::one(table);
    for (const auto& f : m.factors()) {
      const auto it = std::find(sigma.begin(), sigma.end(), f.gen);
      if (it != sigma.end()) {
        term = mul_serial(term, pow(e[static_cast<std::size_t>(it - sigma.begin())], f.exp));
      } else {
        term = mul_serial(term, Polynomial::gen(table, f.gen, f.exp));
      }
    }
    out += term;
  }
  return out;
}

Polynomial elementary_rewrite(const Polynomial& p, const std::vector<GenId>& roots, const std::vector<GenId>& sigma) {
  if (sigma.size() != roots.size()) throw UsageError("elementary_rewrite needs one sigma per root");
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    if (!(swap_generators(p, roots[i], roots[i + 1]) == p))
      throw UsageError("elementary_rewrite: input is not symmetric in the roots");
  }
  for (const auto& m : p.terms()) {
    for (GenId s : sigma) {
      if (m.exponent(s) != 0) throw UsageError("elementary_rewrite: input already mentions sigma");
    }
  }

  const auto& table = p.table();
  auto root_vector = [&](const Monomial& m) {
    std::vector<Exponent> v;
    for (GenId r : roots) v.push_back(m.exponent(r));
    return v;
  };

  Polynomial rest = p;
  Polynomial result(table);
  while (!rest.is_zero()) {
    // Leading term: lexicographically largest root exponent vector.
    const Monomial* lead = &rest.terms().front();
    auto lead_vec = root_vector(*lead);
    for (const auto& m : rest.terms()) {
      auto v = root_vector(m);
      if (v > lead_vec) {
        lead = &m;
        lead_vec = std::move(v);
      }
    }
    Monomial coefficient = *lead;
    for (GenId r : roots) coefficient = coefficient.without(r);
    std::vector<Factor> f(coefficient.factors().begin(), coefficient.factors().end());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Exponent next = k + 1 < roots.size() ? lead_vec[k + 1] : 0;
      if (lead_vec[k] < next) throw UsageError("elementary_rewrite: input is not symmetric in the roots");
      if (lead_vec[k] > next) f.push_back(Factor{sigma[k], lead_vec[k] - next});
    }
    const Polynomial term = Polynomial::monomial(table, Monomial(std::move(f)));
    result += term;
    rest += expand_elementary(term, roots, sigma);
  }
  return result;
}

// ---------------------------------------------------------------- f_omega(nu)

Polynomial fomega_nu_d4(Partition4 w, int pure_line_roots) {
  const NuSide& nu = nu_side();
  const Polynomial raw = f_omega_raw(w, nu.roots(pure_line_roots));
  const Polynomial d4 = coefficient_of(raw, nu.d, 4);
  return truncate_degree(elementary_rewrite(d4, nu.all_roots(), nu.sigma), 4);
}

Polynomial fomega_nu_printed(Partition4 w) {
  const NuSide& nu = nu_side();
  const auto& t = nu.table;
  auto s = [&](int k, Exponent e = 1) { return Polynomial::gen(t, nu.sigma[static_cast<std::size_t>(k - 1)], e); };
  const Polynomial s4 = s(4);
  const Polynomial s13 = s(1) * s(3);
  const Polynomial s22 = s(2, 2);
  const Polynomial s112 = s(1, 2) * s(2);
  const Polynomial s1111 = s(1, 4);
  switch (w) {
    case Partition4::omega1:
      return s4;
    case Partition4::omega2:
      return s13 + s4;
    case Partition4::omega3:
      return s22 + s13 + s4;
    case Partition4::omega4:
      return s112 + s22 + s13 + s4;
    case Partition4::omega5:
      return s1111 + s112 + s22 + s13 + s4;
  }
  throw UsageError("unknown partition");
}

std::string v_form(const Polynomial& p) {
  std::string text = to_string(p);
  for (std::size_t pos = 0; (pos = text.find("sigma_", pos)) != std::string::npos;) {
    text.replace(pos, 6, "V_");
    pos += 2;
  }
  return text;
}

namespace {

std::vector<Monomial> sigma_degree4_basis() {
  const NuSide& nu = nu_side();
  auto mono = [&](std::vector<std::pair<int, Exponent>> f) {
    std::vector<Factor> out;
    for (auto [k, e] : f) out.push_back(Factor{nu.sigma[static_cast<std::size_t>(k - 1)], e});
    return Monomial(std::move(out));
  };
  return {mono({{4, 1}}), mono({{1, 1}, {3, 1}}), mono({{2, 2}}), mono({{1, 2}, {2, 1}}), mono({{1, 4}})};
}

std::string combination_text(const std::vector<std::size_t>& tags) {
  if (tags.empty()) return "0";
  std::string out;
  for (std::size_t t : tags) {
    if (!out.empty()) out += " + ";
    out += "f_omega" + std::to_string(t);
  }
  return out;
}

}  // namespace

CheckReport fomega_nu_check(Partition4 w) {
  CheckReport r = make_report("fomega_nu", {{"omega", name(w)}},
                              "expansion over 8 splitting roots, elementary rewriting, expansion back");
  const NuSide& nu = nu_side();
  const Polynomial computed = fomega_nu_d4(w);
  const Polynomial d4 = coefficient_of(f_omega_raw(w, nu.roots()), nu.d, 4);
  if (!(expand_elementary(computed, nu.all_roots(), nu.sigma) == d4)) {
    mark(r, Status::fail, "rewrite of the d^4 coefficient does not expand back");
    return r;
  }
  const Polynomial printed = fomega_nu_printed(w);
  if (!(computed == printed)) {
    // Certificate: the printed value as a combination of computed classes.
    MonomialBasis basis(sigma_degree4_basis());
    Gf2Eliminator elim(basis.size());
    for (auto v : kPartitions4) elim.insert(basis.coordinates(fomega_nu_d4(v)), static_cast<std::size_t>(index(v)));
    const auto red = elim.reduce(basis.coordinates(printed));
    mark(r, Status::paper_mismatch,
         "computed " + v_form(computed) + "; printed " + v_form(printed) + " = " +
             (red.in_span() ? combination_text(red.combination) : std::string("outside the computed span")));
  }
  return r;
}

CheckReport span_check() {
  MonomialBasis basis(sigma_degree4_basis());
  const NuSide& nu = nu_side();
  Gf2Eliminator elim(basis.size());
  for (auto w : kPartitions4) elim.insert(basis.coordinates(fomega_nu_d4(w)), static_cast<std::size_t>(index(w)));

  std::string certificate;
  bool all_in_span = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    BitVector v(basis.size());
    v.set(i);
    const auto red = elim.reduce(v);
    if (!certificate.empty()) certificate += "; ";
    certificate += v_form(Polynomial::monomial(nu.table, basis[i])) + " = " +
                   (red.in_span() ? combination_text(red.combination) : std::string("not reached"));
    all_in_span = all_in_span && red.in_span();
  }
  CheckReport r = make_report("span_check", {},
                              "row reduction over the degree-4 monomials in sigma_1..sigma_4: " + certificate);
  if (elim.rank() != basis.size() || !all_in_span) {
    mark(r, Status::paper_mismatch, "rank " + std::to_string(elim.rank()) + " of 5: " + certificate);
  }
  return r;
}

// ---------------------------------------------------------------- f_omega(lambda)

Polynomial fomega_lambda_printed(Partition4 w, const FnSide& side) {
  const auto& t = side.table;
  auto e = [&](int k, const std::vector<GenId>& v) { return elementary(k, t, v); };
  auto m = [&](std::vector<int> lambda, const std::vector<GenId>& v) { return monomial_symmetric(lambda, t, v); };
  const auto& x = side.x;
  const auto& y = side.y;
  switch (w) {
    case Partition4::omega1:
      return e(4, x) + e(4, y) + e(2, x) * e(2, y) + e(1, x) * e(3, y) + e(3, x) * e(1, y);
    case Partition4::omega2:
      return m({2, 1, 1}, x) + m({2, 1, 1}, y) + m({2}, x) * e(2, y) + e(2, x) * m({2}, y) + e(1, x) * m({2, 1}, y) +
             m({2, 1}, x) * e(1, y);
    case Partition4::omega3:
      return m({2, 2}, x) + m({2, 2}, y) + m({2}, x) * m({2}, y);
    case Partition4::omega4:
      return m({3, 1}, x) + m({3, 1}, y) + m({3}, x) * e(1, y) + e(1, x) * m({3}, y);
    case Partition4::omega5:
      return m({4}, x) + m({4}, y);
  }
  throw UsageError("unknown partition");
}

CheckReport fomega_lambda_structure(Partition4 w, int x_roots, int y_roots) {
  CheckReport r = make_report("fomega_lambda", {{"M", y_roots}, {"N", x_roots}, {"omega", name(w)}},
                              "expansion over the splitting roots; c^4 coefficient against m_lambda of all roots");
  const auto side = fn_side(1, x_roots, y_roots);
  const Polynomial raw = f_omega_raw(w, lambda_roots(*side));
  if (!raw.is_zero() && (!is_homogeneous(raw) || max_degree(raw) != 8)) {
    mark(r, Status::fail, "f_omega is not homogeneous of degree 8");
    return r;
  }
  const Exponent max_c = raw.is_zero() ? 0 : max_exponent(raw, side->c);
  const int min_base = min_base_degree(raw);
  if (max_c > 4 || min_base < 4) {
    mark(r, Status::paper_mismatch, "max c-power " + std::to_string(max_c) + ", min base degree " + std::to_string(min_base));
    return r;
  }
  std::vector<GenId> all = side->x;
  all.insert(all.end(), side->y.begin(), side->y.end());
  const Polynomial c4 = coefficient_of(raw, side->c, 4);
  if (!(c4 == monomial_symmetric(parts(w), side->table, all))) {
    mark(r, Status::fail, "c^4 coefficient is not m_lambda of the roots: " + to_string(c4));
    return r;
  }
  const Polynomial printed = fomega_lambda_printed(w, *side);
  if (!(c4 == printed)) mark(r, Status::paper_mismatch, "computed " + to_string(c4) + "; printed " + to_string(printed));
  return r;
}

}  // namespace invofix
