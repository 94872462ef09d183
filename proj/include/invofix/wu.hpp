#pragma once

// Steenrod squares on Stiefel-Whitney classes of a closed 4-manifold F^4
// (tangent classes w_i) and of a bundle over it (normal classes v_i), and
// degree-4 ideal membership with certificates.

#include <optional>
#include <string>
#include <vector>

#include "invofix/gf2core.hpp"
#include "invofix/gf2linear.hpp"
#include "invofix/report.hpp"

namespace invofix {

struct F4Algebra {
  TablePtr table;
  std::vector<GenId> w;  // w[1..4]; index 0 unused
  std::vector<GenId> v;

  // 1 for i = 0 and 0 above degree 4.
  Polynomial w_poly(int i) const;
  Polynomial v_poly(int i) const;
  Polynomial u1() const;  // w_1
  Polynomial u2() const;  // w_1^2 + w_2
  // Every monomial in w_1..w_4, v_1..v_4 of the given degree, sorted.
  std::vector<Monomial> monomials(int degree) const;
  Polynomial parse(std::string_view text) const { return parse_polynomial(table, text); }
};
const F4Algebra& f4_algebra();

// Sq^k on the truncated algebra: the Wu formula on each family of
// generators, Cartan on products, everything above degree 4 dropped.
Polynomial sq(int k, const Polynomial& p);

struct Relation {
  std::string label;
  Polynomial value;
};

// printed: w_3 = w_1 w_2 as a relation. derived: w_1 w_2 = 0, which is what
// w_3 = Sq^1(u_2) gives under the Wu formula.
enum class W3Form { printed, derived };

// Sq^1 x + u_1 x (deg x = 3), Sq^2 x + u_2 x (deg x = 2), the w_3 relation
// and w_4 + u_2^2; zero and repeated relations removed.
std::vector<Relation> manifold_relations(W3Form form = W3Form::printed);
// V_4, V_1 V_3, V_2^2, V_1^2 V_2, V_1^4 with W(tau + mu) = 1 + V_1 + ... + V_4.
std::vector<Relation> system_relations();
Polynomial system_class(int i);  // V_i
// The five relations of the Lemma, each written as (left + right).
std::vector<Relation> lemma_relations();

struct Membership {
  bool member = false;
  std::vector<std::string> certificate;  // generator * monomial products summing to the target
  Polynomial residual;                   // reduced remainder when not a member
};

// Decides whether the degree-4 target lies in the span of g * monomial for g
// in `relations`. Throws UsageError when the target is not homogeneous of
// degree 4.
Membership membership(const Polynomial& target, const std::vector<Relation>& relations);
Membership membership(const Polynomial& target);  // manifold and system relations
std::vector<Relation> all_relations(W3Form form = W3Form::printed);

// Substitutes w from (1+alpha)^5 and v from (1+alpha)^3 into Z2[alpha]/alpha^5.
Polynomial model_bundle_value(const Polynomial& p);

CheckReport lemma_membership_check(int relation);  // 1..5
CheckReport model_bundle_check(const std::string& family, int relation);  // "lemma" or "system", 1..5

// The individual steps quoted in the derivation of the Lemma.
std::vector<std::string> derivation_step_labels();
CheckReport derivation_step_check(const std::string& label);

// Decides the printed w_3 relation and lists the Lemma relations that hold
// only because of it.
CheckReport w3_relation_check();

}  // namespace invofix
