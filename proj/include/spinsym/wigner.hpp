#pragma once

#include "spinsym/exact.hpp"

namespace spinsym::wigner {

// Clebsch-Gordan coefficient C^{j1,j2,j3}_{m1,m2,m3}.  All six arguments are
// doubled half-integers (j <-> 2j).  Exact zero when m3 != m1+m2 or the
// triangle condition fails; DomainError when |m|>j or the parities mismatch.
SqrtRational clebsch_gordan(long dj1, long dm1, long dj2, long dm2, long dj3, long dm3);

// Wigner 3jm symbol, doubled half-integer arguments.  Exact zero unless
// m1+m2+m3 = 0 and the triangle condition holds.
SqrtRational wigner_3jm(long dl1, long dm1, long dl2, long dm2, long dl3, long dm3);

// Wigner 6j symbol {l1 l2 l3; j j j} with j = n/2, Racah's single sum.
// l1,l2,l3 are plain integers, 0 <= li <= n.  Exact zero when the (l1,l2,l3)
// triangle fails; DomainError when an l is out of range.
SqrtRational wigner_6j_jjj(int l1, int l2, int l3, int n);

// Wigner product symbol [l1 l2 l3; m1 m2 m3][j], n = 2j:
// sqrt((2l1+1)(2l2+1)(2l3+1)) * 3jm(l1,l2,l3;-m1,-m2,-m3) * {l1 l2 l3; j j j}.
SqrtRational product_symbol(int l1, int m1, int l2, int m2, int l3, int m3, int n);

// Closed form of C^{l1,l2,l3}_{0,0,0}; exact zero for odd l1+l2+l3 or outside
// the triangle.  Plain integer arguments.
SqrtRational cg_000(int l1, int l2, int l3);

// The bracket coefficient P(l1,l2,l3); exact zero for even l1+l2+l3 or
// outside the triangle.  Plain integer arguments.
SqrtRational poisson_p(int l1, int l2, int l3);

// Double-precision memoized views (shared across modules).
double clebsch_gordan_d(long dj1, long dm1, long dj2, long dm2, long dj3, long dm3);
double product_symbol_d(int l1, int m1, int l2, int m2, int l3, int m3, int n);
double cg_000_d(int l1, int l2, int l3);
double poisson_p_d(int l1, int l2, int l3);

}  // namespace spinsym::wigner
