#pragma once

// The degree-8 classes f_omega indexed by partitions of 4, evaluated through
// splitting roots, and rewriting of symmetric polynomials in elementary
// symmetric generators.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "invofix/charclass.hpp"
#include "invofix/gf2core.hpp"
#include "invofix/gf2linear.hpp"
#include "invofix/report.hpp"

namespace invofix {

enum class Partition4 { omega1, omega2, omega3, omega4, omega5 };

inline constexpr std::array<Partition4, 5> kPartitions4{Partition4::omega1, Partition4::omega2, Partition4::omega3,
                                                        Partition4::omega4, Partition4::omega5};

// (1,1,1,1), (2,1,1), (2,2), (3,1), (4).
std::vector<int> parts(Partition4 w);
std::string name(Partition4 w);  // "omega1" .. "omega5"
int index(Partition4 w);         // 1 .. 5

// Tangent roots of a projectivization: the base roots x_i, the shifted
// fiber roots line + y_j, and optionally some roots equal to the line class
// itself (from trivial summands).
struct RootSystem {
  TablePtr table;
  std::vector<GenId> base_roots;
  std::vector<GenId> fiber_roots;
  GenId line = 0;
  int pure_line_roots = 0;

  std::vector<Polynomial> tangent_roots() const;
};

// The RP(mu) side: x_1..x_4, y_1..y_4, the line class d, and sigma_1..sigma_8
// on one shared table.
struct NuSide {
  TablePtr table;
  std::vector<GenId> x;
  std::vector<GenId> y;
  GenId d = 0;
  std::vector<GenId> sigma;  // sigma[0] is sigma_1

  RootSystem roots(int pure_line_roots = 0) const;
  std::vector<GenId> all_roots() const;  // x then y
};
const NuSide& nu_side();

// The RP(eta) side built on an F^n table that carries x and y roots.
RootSystem lambda_roots(const FnSide& side);

// Monomial-symmetric sum over distinct root indices of prod z^k (line+z)^k.
Polynomial f_omega_raw(Partition4 w, const RootSystem& roots);

// Monomial symmetric function m_lambda in the given variables.
Polynomial monomial_symmetric(const std::vector<int>& lambda, const TablePtr& table, const std::vector<GenId>& vars);
Polynomial elementary(int k, const TablePtr& table, const std::vector<GenId>& vars);

// Rewrites p, symmetric in `roots`, as a polynomial in sigma_1..sigma_R
// (sigma.size() == roots.size()); other generators act as coefficients.
// Throws UsageError when p is not symmetric.
Polynomial elementary_rewrite(const Polynomial& p, const std::vector<GenId>& roots, const std::vector<GenId>& sigma);
// Substitutes sigma_k -> e_k(roots).
Polynomial expand_elementary(const Polynomial& p, const std::vector<GenId>& roots, const std::vector<GenId>& sigma);

// Coefficient of d^4 in f_omega(nu) over 4+4 roots, in sigma_1..sigma_4.
Polynomial fomega_nu_d4(Partition4 w, int pure_line_roots = 0);
// The printed coefficient, on the same table.
Polynomial fomega_nu_printed(Partition4 w);
// sigma_i renamed V_i.
std::string v_form(const Polynomial& p);

CheckReport fomega_nu_check(Partition4 w);
CheckReport span_check();

// The c^4 coefficient of f_omega(lambda) as printed, as sums over x and y.
Polynomial fomega_lambda_printed(Partition4 w, const FnSide& side);
CheckReport fomega_lambda_structure(Partition4 w, int x_roots, int y_roots);

}  // namespace invofix
