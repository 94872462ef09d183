#include "invofix/wu.hpp"

#include <algorithm>
#include <functional>

#include "invofix/binomial.hpp"
#include "invofix/error.hpp"
#include "invofix/rings.hpp"

namespace invofix {

namespace {

constexpr int kTop = 4;

}  // namespace

const F4Algebra& f4_algebra() {
  static const F4Algebra instance = [] {
    auto table = std::make_shared<GeneratorTable>();
    F4Algebra a;
    a.w.assign(1, 0);
    a.v.assign(1, 0);
    for (int i = 1; i <= kTop; ++i) a.w.push_back(table->add("w_" + std::to_string(i), i, Stratum::base));
    for (int i = 1; i <= kTop; ++i) a.v.push_back(table->add("v_" + std::to_string(i), i, Stratum::base));
    a.table = std::move(table);
    return a;
  }();
  return instance;
}

Polynomial F4Algebra::w_poly(int i) const {
  if (i == 0) return Polynomial::one(table);
  if (i < 0 || i > kTop) return Polynomial(table);
  return Polynomial::gen(table, w[i]);
}

Polynomial F4Algebra::v_poly(int i) const {
  if (i == 0) return Polynomial::one(table);
  if (i < 0 || i > kTop) return Polynomial(table);
  return Polynomial::gen(table, v[i]);
}

Polynomial F4Algebra::u1() const { return w_poly(1); }
Polynomial F4Algebra::u2() const { return w_poly(1) * w_poly(1) + w_poly(2); }

std::vector<Monomial> F4Algebra::monomials(int degree) const {
  std::vector<Monomial> out;
  const auto& gens = table->generators();
  std::vector<Factor> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t g, int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (g == gens.size()) return;
    const int deg = gens[g].degree;
    for (int e = remaining / deg; e >= 1; --e) {
      current.push_back(Factor{gens[g].id, static_cast<Exponent>(e)});
      rec(g + 1, remaining - e * deg);
      current.pop_back();
    }
    rec(g + 1, remaining);
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ squares

namespace {

// Sq^k of the m-th class of one family, by the Wu formula
// Sq^k(x_m) = sum_t C(m-k+t-1, t) x_{k-t} x_{m+t}.
Polynomial sq_generator(int k, int m, const std::function<Polynomial(int)>& cls) {
  const auto& a = f4_algebra();
  if (k == 0) return cls(m);
  if (k > m) return Polynomial(a.table);
  Polynomial out(a.table);
  for (int t = 0; t <= k; ++t) {
    if (m + t > kTop) break;
    if (binomial::parity(static_cast<std::int64_t>(m - k + t - 1), t)) out += cls(k - t) * cls(m + t);
  }
  return truncate_degree(out, kTop);
}

Polynomial sq_monomial(int k, const Monomial& m) {
  const auto& a = f4_algebra();
  if (k == 0) return Polynomial::monomial(a.table, m);
  if (m.is_one()) return Polynomial(a.table);
  // Split off one generator and apply Cartan.
  const Factor first = m.factors().front();
  std::vector<Factor> rest_factors(m.factors().begin(), m.factors().end());
  if (rest_factors.front().exp == 1) {
    rest_factors.erase(rest_factors.begin());
  } else {
    --rest_factors.front().exp;
  }
  const Monomial rest(std::move(rest_factors));
  const auto& gen = (*a.table)[first.gen];
  const bool is_w = std::find(a.w.begin() + 1, a.w.end(), first.gen) != a.w.end();
  const std::function<Polynomial(int)> cls = [&](int i) { return is_w ? a.w_poly(i) : a.v_poly(i); };

  Polynomial out(a.table);
  for (int i = 0; i <= std::min(k, gen.degree); ++i) {
    const Polynomial left = sq_generator(i, gen.degree, cls);
    if (left.is_zero()) continue;
    const Polynomial right = sq_monomial(k - i, rest);
    if (right.is_zero()) continue;
    out += mul(left, right, MulOptions{kInfiniteDegree, kTop});
  }
  return out;
}

}  // namespace

Polynomial sq(int k, const Polynomial& p) {
  const auto& a = f4_algebra();
  if (p.table() != a.table) throw UsageError("sq: element of another algebra");
  if (k < 0) throw UsageError("sq: negative index");
  Polynomial out(a.table);
  for (const auto& m : p.terms()) out += sq_monomial(k, m);
  return truncate_degree(out, kTop);
}

// ------------------------------------------------------------------ relations

std::vector<Relation> manifold_relations(W3Form form) {
  const auto& a = f4_algebra();
  std::vector<Relation> out;
  std::vector<Polynomial> seen;
  auto push = [&](std::string label, Polynomial value) {
    if (value.is_zero()) return;
    if (std::find(seen.begin(), seen.end(), value) != seen.end()) return;
    seen.push_back(value);
    out.push_back(Relation{std::move(label), std::move(value)});
  };
  for (const auto& m : a.monomials(3)) {
    const Polynomial x = Polynomial::monomial(a.table, m);
    push("Sq^1(" + to_string(x) + ") + u_1*" + to_string(x), sq(1, x) + a.u1() * x);
  }
  for (const auto& m : a.monomials(2)) {
    const Polynomial x = Polynomial::monomial(a.table, m);
    push("Sq^2(" + to_string(x) + ") + u_2*(" + to_string(x) + ")", sq(2, x) + a.u2() * x);
  }
  if (form == W3Form::printed) {
    push("w_3 + w_1*w_2", a.w_poly(3) + a.w_poly(1) * a.w_poly(2));
  } else {
    push("w_1*w_2", a.w_poly(1) * a.w_poly(2));
  }
  push("w_4 + u_2^2", a.w_poly(4) + a.u2() * a.u2());
  return out;
}

Polynomial system_class(int i) {
  const auto& a = f4_algebra();
  Polynomial out(a.table);
  for (int j = 0; j <= i; ++j) out += a.w_poly(j) * a.v_poly(i - j);
  return out;
}

std::vector<Relation> system_relations() {
  const Polynomial V1 = system_class(1);
  const Polynomial V2 = system_class(2);
  const Polynomial V3 = system_class(3);
  const Polynomial V4 = system_class(4);
  return {
      {"V_4", V4},
      {"V_1*V_3", V1 * V3},
      {"V_2^2", V2 * V2},
      {"V_1^2*V_2", V1 * V1 * V2},
      {"V_1^4", pow(V1, 4)},
  };
}

std::vector<Relation> lemma_relations() {
  const auto& a = f4_algebra();
  return {
      {"v_1^4 = w_1^4", a.parse("v_1^4 + w_1^4")},
      {"v_2^2 + w_2^2 = v_1^2*w_1^2", a.parse("v_2^2 + w_2^2 + v_1^2*w_1^2")},
      {"v_1*v_3 = v_1^2*w_2 + w_1^2*v_2", a.parse("v_1*v_3 + v_1^2*w_2 + w_1^2*v_2")},
      {"v_1^2*v_2 + v_1*v_3 = v_1^3*w_1 + v_1*w_1^3", a.parse("v_1^2*v_2 + v_1*v_3 + v_1^3*w_1 + v_1*w_1^3")},
      {"v_4 + w_4 = v_1^2*w_2 + v_1*w_3", a.parse("v_4 + w_4 + v_1^2*w_2 + v_1*w_3")},
  };
}

// ------------------------------------------------------------------ membership

std::vector<Relation> all_relations(W3Form form) {
  auto relations = manifold_relations(form);
  for (auto& r : system_relations()) relations.push_back(std::move(r));
  return relations;
}

Membership membership(const Polynomial& target, const std::vector<Relation>& relations) {
  const auto& a = f4_algebra();
  if (target.table() != a.table) throw UsageError("membership: element of another algebra");
  if (!target.is_zero() && (!is_homogeneous(target) || max_degree(target) != kTop))
    throw UsageError("membership: target must be homogeneous of degree 4");

  MonomialBasis basis(a.monomials(kTop));
  Gf2Eliminator elim(basis.size());
  std::vector<std::string> labels;
  for (const auto& rel : relations) {
    if (!is_homogeneous(rel.value)) throw UsageError("membership: relation '" + rel.label + "' is not homogeneous");
    const int deg = max_degree(rel.value);
    if (deg > kTop) continue;
    for (const auto& m : a.monomials(kTop - deg)) {
      const Polynomial product = truncate_degree(rel.value * Polynomial::monomial(a.table, m), kTop);
      if (product.is_zero()) continue;
      const std::string label = m.is_one() ? "(" + rel.label + ")" : to_string(m, *a.table) + "*(" + rel.label + ")";
      elim.insert(basis.coordinates(product), labels.size());
      labels.push_back(label);
    }
  }
  const auto red = elim.reduce(basis.coordinates(target));
  Membership out{red.in_span(), {}, basis.polynomial(red.residual, a.table)};
  if (out.member) {
    for (std::size_t tag : red.combination) out.certificate.push_back(labels[tag]);
  }
  return out;
}

Membership membership(const Polynomial& target) { return membership(target, all_relations()); }

// ------------------------------------------------------------------ model bundle

Polynomial model_bundle_value(const Polynomial& p) {
  const auto& a = f4_algebra();
  const auto& ad = alpha_d_table();
  const Polynomial alpha = Polynomial::gen(ad.table, ad.alpha);
  const Polynomial one_plus_alpha = Polynomial::one(ad.table) + alpha;
  const Polynomial w_total = pow(one_plus_alpha, 5);
  const Polynomial v_total = pow(one_plus_alpha, 3);
  std::map<GenId, Polynomial> assignment;
  for (int i = 1; i <= kTop; ++i) {
    assignment.emplace(a.w[i], component(w_total, i));
    assignment.emplace(a.v[i], component(v_total, i));
  }
  const Polynomial image = substitute(p, assignment, ad.table);
  return filter(image, [&](const Monomial& m) { return m.exponent(ad.alpha) <= kTop; });
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// Recomputes the certificate sum from its labels' relations and compares it
// with the target; the eliminator is not trusted on its own.
bool certificate_sums_to(const Polynomial& target, const Membership& m, const std::vector<Relation>& relations) {
  const auto& a = f4_algebra();
  Polynomial sum(a.table);
  for (const auto& label : m.certificate) {
    bool found = false;
    for (const auto& rel : relations) {
      const std::string wrapped = "(" + rel.label + ")";
      if (label == wrapped) {
        sum += rel.value;
        found = true;
        break;
      }
      if (label.size() > wrapped.size() && label.compare(label.size() - wrapped.size(), wrapped.size(), wrapped) == 0 &&
          label[label.size() - wrapped.size() - 1] == '*') {
        const std::string mono = label.substr(0, label.size() - wrapped.size() - 1);
        sum += truncate_degree(rel.value * a.parse(mono), kTop);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return sum == target;
}

}  // namespace

CheckReport lemma_membership_check(int relation) {
  const auto rels = lemma_relations();
  if (relation < 1 || relation > static_cast<int>(rels.size())) throw UsageError("lemma relation must be 1..5");
  const Relation& rel = rels[static_cast<std::size_t>(relation - 1)];
  CheckReport r = make_report("lemma_membership", {{"relation", relation}},
                              "row reduction of the degree-4 ideal; certificate re-summed");
  const auto relations = all_relations();
  const Membership m = membership(rel.value, relations);
  if (m.member) {
    if (!certificate_sums_to(rel.value, m, relations)) {
      mark(r, Status::fail, "certificate does not sum to the relation");
    } else {
      r.oracle += ": " + rel.label + " <= " + join(m.certificate, " + ");
    }
  } else {
    mark(r, Status::paper_mismatch, rel.label + " is not in the ideal; residual " + to_string(m.residual));
  }
  return r;
}

CheckReport model_bundle_check(const std::string& family, int relation) {
  std::vector<Relation> rels;
  if (family == "lemma") {
    rels = lemma_relations();
  } else if (family == "system") {
    rels = system_relations();
  } else {
    throw UsageError("model_bundle_check: family must be 'lemma' or 'system'");
  }
  if (relation < 1 || relation > static_cast<int>(rels.size())) throw UsageError("relation index must be 1..5");
  const Relation& rel = rels[static_cast<std::size_t>(relation - 1)];
  CheckReport r = make_report("model_bundle", {{"family", family}, {"relation", relation}},
                              "substitution of W(RP^4) = (1+alpha)^5 and W(3xi) = (1+alpha)^3");
  const Polynomial residual = model_bundle_value(rel.value);
  if (!residual.is_zero()) mark(r, Status::paper_mismatch, rel.label + " leaves residual " + to_string(residual));
  return r;
}

// ------------------------------------------------------------------ derivation steps

std::vector<std::string> derivation_step_labels() {
  return {"sq1_w1_squared", "sq1_v2",     "w3_from_u2",       "w1sq_w2",          "w1_v3",
          "v1_v2_w1",       "v2_squared", "reduce_V1V3",      "reduce_V1sq_V2",   "reduce_V4"};
}

CheckReport derivation_step_check(const std::string& label) {
  const auto& a = f4_algebra();
  CheckReport r = make_report("lemma_step", {{"step", label}}, "Wu formula with Cartan; degree-4 ideal membership");
  auto expect_equal = [&](const std::string& what, const Polynomial& computed, const Polynomial& printed) {
    if (!(computed == printed))
      mark(r, Status::paper_mismatch, what + " = " + to_string(computed) + ", printed " + to_string(printed));
  };
  auto expect_member = [&](const std::string& what, const Polynomial& target, const std::vector<Relation>& relations) {
    const Membership m = membership(target, relations);
    if (!m.member) {
      mark(r, Status::paper_mismatch, what + " is not in the ideal; residual " + to_string(m.residual));
    } else if (!certificate_sums_to(target, m, relations)) {
      mark(r, Status::fail, what + ": certificate does not sum to the target");
    } else {
      r.oracle += "; " + what + " <= " + join(m.certificate, " + ");
    }
  };
  const auto manifold = manifold_relations();

  if (label == "sq1_w1_squared") {
    expect_equal("Sq^1(w_1^2)", sq(1, a.parse("w_1^2")), Polynomial(a.table));
  } else if (label == "sq1_v2") {
    expect_equal("Sq^1(v_2)", sq(1, a.parse("v_2")), a.parse("v_1*v_2 + v_3"));
  } else if (label == "w3_from_u2") {
    expect_equal("Sq^1(u_2)", sq(1, a.u2()), a.parse("w_1*w_2"));
  } else if (label == "w1sq_w2") {
    expect_equal("Sq^2(w_2)", sq(2, a.parse("w_2")), a.parse("w_2^2"));
    expect_member("w_1^2*w_2", a.parse("w_1^2*w_2"), manifold);
  } else if (label == "w1_v3") {
    expect_equal("Sq^1(v_3)", sq(1, a.parse("v_3")), a.parse("v_1*v_3"));
    expect_member("w_1*v_3 + v_1*v_3", a.parse("w_1*v_3 + v_1*v_3"), manifold);
  } else if (label == "v1_v2_w1") {
    expect_equal("Sq^1(v_1*v_2)", sq(1, a.parse("v_1*v_2")), a.parse("v_1*v_3"));
    expect_member("v_1*v_2*w_1 + v_1*v_3", a.parse("v_1*v_2*w_1 + v_1*v_3"), manifold);
  } else if (label == "v2_squared") {
    expect_equal("Sq^2(v_2)", sq(2, a.parse("v_2")), a.parse("v_2^2"));
    expect_member("v_2^2 + w_1^2*v_2 + v_2*w_2", a.parse("v_2^2 + w_1^2*v_2 + v_2*w_2"), manifold);
  } else if (label == "reduce_V1V3") {
    expect_member("V_1*V_3 + v_1^2*w_2 + v_1*v_3 + w_1^2*v_2",
                  system_class(1) * system_class(3) + a.parse("v_1^2*w_2 + v_1*v_3 + w_1^2*v_2"), manifold);
  } else if (label == "reduce_V1sq_V2") {
    auto relations = manifold;
    relations.push_back(lemma_relations()[2]);
    expect_member("V_1^2*V_2 + v_1^2*v_2 + v_1*v_3 + v_1^3*w_1 + v_1*w_1^3",
                  pow(system_class(1), 2) * system_class(2) + a.parse("v_1^2*v_2 + v_1*v_3 + v_1^3*w_1 + v_1*w_1^3"),
                  relations);
  } else if (label == "reduce_V4") {
    auto relations = manifold;
    relations.push_back(lemma_relations()[2]);
    expect_member("V_4 + v_4 + w_4 + v_1^2*w_2 + v_1*w_3",
                  system_class(4) + a.parse("v_4 + w_4 + v_1^2*w_2 + v_1*w_3"), relations);
  } else {
    throw UsageError("unknown derivation step '" + label + "'");
  }
  return r;
}

CheckReport w3_relation_check() {
  const auto& a = f4_algebra();
  CheckReport r = make_report("w3_relation", {},
                              "Wu formula on w_2; lemma relations re-decided with w_1*w_2 in place of w_3 + w_1*w_2");
  const Polynomial derived = sq(1, a.u2());
  if (derived == a.w_poly(3)) return r;
  std::string witness = "Sq^1(u_2) = " + to_string(derived) + ", so w_3 = Sq^1(u_2) forces w_1*w_2 = 0";
  const auto printed = all_relations(W3Form::printed);
  const auto derived_set = all_relations(W3Form::derived);
  const auto lemma = lemma_relations();
  for (std::size_t i = 0; i < lemma.size(); ++i) {
    const bool with_printed = membership(lemma[i].value, printed).member;
    const Membership m = membership(lemma[i].value, derived_set);
    if (with_printed && !m.member)
      witness += "; relation " + std::to_string(i + 1) + " needs the printed form (residual " + to_string(m.residual) + ")";
  }
  mark(r, Status::paper_mismatch, witness);
  return r;
}

}  // namespace invofix
