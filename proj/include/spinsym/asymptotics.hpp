#pragma once

#include "spinsym/correspondence.hpp"
#include "spinsym/exact.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace spinsym::asym {

using corr::Generator;

// Exact coefficient of n^0 (order 0) or n^-1 (order 1) in the expansion of
// the normalized product symbol: C^{l1,l2,l3}_{m1,m2,m} times C_000 or P.
SqrtRational asymptotic_coeff(int l1, int m1, int l2, int m2, int l3, int order);

// (-1)^(n+m) sqrt((n+1)(2l3+1)/((2l1+1)(2l2+1))) [l1 l2 l3; m1 m2 -m][j],
// m = m1+m2, evaluated in floats from the exact value.
double normalized_product_symbol(int l1, int m1, int l2, int m2, int l3, int n);

// |normalized product symbol - order0 - order1/n|
double expansion_residual(int l1, int m1, int l2, int m2, int l3, int n);

// Alternating factorial sums over the 6j summation window; brute force and
// closed form, exact.  Throw TriangleViolation when delta(l1,l2,l3) = 0.
Rational sigma0_brute(int l1, int l2, int l3);
Rational sigma1_brute(int l1, int l2, int l3);
std::pair<Rational, Rational> sigma_brute_pair(int l1, int l2, int l3);
Rational sigma0_closed(int l1, int l2, int l3);
Rational sigma1_closed(int l1, int l2, int l3);

// Least-squares slope of log(err) against log(n).
double fit_loglog_slope(const std::vector<int>& ns, const std::vector<double>& errs);

struct LimitEstimate {
  double value = 0.0;
  double uncertainty = 0.0;
  bool exists = false;
};

// Polynomial extrapolation in 1/n to n = infinity (Neville), with a
// drop-first-point consistency gauge.
LimitEstimate estimate_limit(const std::vector<int>& ns, const std::vector<double>& ys);

// Numerical classification of a correspondence sequence.  Flags are measured
// evidence at the stated tolerances, not proofs; raw estimates are carried
// so thresholds can be re-judged.
struct SequenceReport {
  int l_max = 0;
  std::vector<int> n_grid;
  double limit_tol = 1e-6;       // |limit - target| threshold
  double pure_tol = 1e-4;        // |lim n(c_l - f(l))| threshold
  double diagonal_tol = 1e-4;    // strong-limiting agreement threshold

  std::vector<LimitEstimate> l_limits;      // index l = 1..l_max (entry 0 unused)
  std::vector<LimitEstimate> pure_limits;   // of n(c_l^n - f(l)), matched sign
  LimitEstimate diag_full;                  // |c_n^n|
  LimitEstimate diag_half;                  // |c_{n/2}^n|

  bool poisson = false;
  bool anti_poisson = false;
  bool pure = false;             // pure-(anti-)Poisson, matching orientation
  bool limiting = false;
  bool pseudo_classical = false;
  bool quasi_classical = false;
  bool strong_limiting = false;
  bool bohr = false;             // (anti-)Poisson and strong-limiting
  bool none = false;

  bool pure_bohr() const { return pure && strong_limiting; }
};

SequenceReport classify_sequence(const Generator& gen, int l_max, std::vector<int> n_grid);

// Sampled sup-norm distances of the symmetrized twisted product from the
// pointwise product and of the scaled commutator from i{.,.}.
struct ConvergenceRow {
  int n = 0;
  double sym_err = 0.0;
  double comm_err = 0.0;
};

std::vector<ConvergenceRow> convergence_study(const Generator& gen, int l1, int m1, int l2,
                                              int m2, const std::vector<int>& n_grid,
                                              int samples = 2000, unsigned seed = 20240817,
                                              int jobs = 1);

// Reference generators covering the distinct asymptotic types.
Generator gen_power_decay();    // c_l^n = n^{-l}
Generator gen_log_drift();      // c_l^n = 1 - log(1 - (l-1)/n)
Generator gen_mod3_signs();     // c_l^n -> h(l), h = -1 on l = 1 mod 3

}  // namespace spinsym::asym
