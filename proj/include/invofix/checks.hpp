#pragma once

// Checks that combine several modules; each returns one report.

#include <cstdint>
#include <string>

#include "invofix/report.hpp"
#include "invofix/symmfunc.hpp"

namespace invofix {

// d^{m-1} = alpha^4 d^{m-5}, alpha d^{m-2} = alpha^2 d^{m-3} = 0 and
// alpha^3 d^{m-4} = alpha^4 d^{m-5}.
CheckReport ring_identities_check(int m);

// M(n) against both printed closed forms of its branch and M(n) <= ceil(5n/2).
CheckReport m_number_check(std::int64_t n);

// The nine tabulated items for (p, q).
CheckReport lucas_items_check(unsigned p, std::int64_t q);
// The printed expansion of W[l]_{2r+1} against the general coefficients and,
// for small t, against the direct series expansion.
CheckReport odd_display_check(unsigned p, std::int64_t q);
// The binomial claimed to be the only zero in that display.
CheckReport unique_zero_check(unsigned p, std::int64_t q);

// bracket_f4 closed form against the series expansion for all l in
// [l_lo, l_hi] and 0 <= t <= t_max, reduced in H*(RP(mu)) with the given m.
CheckReport bracket_sweep_check(int m, std::int64_t l_lo, std::int64_t l_hi, int t_max);

// Ring product of Y against the rewriting reference, and against the printed
// closed form.
CheckReport y_class_check(int n, int m);
// Y reduced modulo the base ideal is d^{M(n-4)}.
CheckReport y_mod_ideal_check(int n, int m);
CheckReport w2_family_check(int n, int m);
// deg X = M(n-4) and the printed dimension count.
CheckReport x_dimension_check(int n);

// Extra factors paired with X on the F^n side.
enum class XExtra { w0_2_fourth, omega1, omega2, omega3, omega4, omega5 };
std::string name(XExtra e);
CheckReport x_side_check(int n, XExtra extra);

}  // namespace invofix
