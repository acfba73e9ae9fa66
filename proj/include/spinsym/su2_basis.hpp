#pragma once

#include "spinsym/exact.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace spinsym::su2 {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Exact single-(sub/super)diagonal real matrix of dimension (n+1)x(n+1):
// entry k (1-based) sits at (k, k+offset) for offset >= 0, at (k-offset, k)
// for offset < 0.  Stored as the coordinate vector of its diagonal.
struct BasisMatrix {
  int n = 0;
  int offset = 0;
  std::vector<SqrtRational> diag;
  std::vector<double> diag_d;  // float view of diag, filled on construction

  int length() const { return n + 1 - std::abs(offset); }
  // 0-based (row, col) of entry k = 0..length()-1
  std::pair<int, int> position(int k) const {
    return offset >= 0 ? std::pair<int, int>{k, k + offset}
                       : std::pair<int, int>{k - offset, k};
  }
  BasisMatrix transposed() const;
  BasisMatrix scaled(const SqrtRational& s) const;
  MatrixXcd to_dense() const;
  void refresh_float();
};

// Angular momentum matrices in the standard basis, n = 2j >= 1.
MatrixXcd j3_matrix(int n);
MatrixXcd jminus_matrix(int n);
MatrixXcd jplus_matrix(int n);
std::vector<Rational> j3_diagonal(int n);             // j, j-1, ..., -j exactly
std::vector<SqrtRational> jminus_subdiagonal(int n);  // sqrt(k(n-k+1)), k=1..n

// mu^n_{l,m} = (l!/sqrt(2l+1)) sqrt((n+l+1)!/(n-l)!) sqrt((l-m)!/(l+m)!),
// for 0 <= m <= l <= n.
SqrtRational mu_norm(int n, int l, int m);

// Coupled standard basis vector e^j(l,m), built from the closed formula
// (alternating sum of J-shift products); memoized.  0 <= l <= n, |m| <= l.
const BasisMatrix& coupled_basis(int n, int l, int m);

// Unnormalized E(l,m) = (-1)^l mu^n_{l,m} e(l,m); negative m via the
// transposition rule with the integer scale p_{l,|m|}.
BasisMatrix unnormalized_e(int n, int l, int m);

// Coefficients of P in the coupled basis, a_{lm} = <e(l,m), P>.
struct CoupledCoefficients {
  int n = 0;
  VectorXcd a;  // size (n+1)^2, index l*l + l + m

  static int index(int l, int m) { return l * l + l + m; }
  std::complex<double> at(int l, int m) const { return a[index(l, m)]; }
};

CoupledCoefficients decompose(const MatrixXcd& P);
MatrixXcd reconstruct(const CoupledCoefficients& coeffs);

// Exact product coefficients M[j]^{l1,l2,l}_{m1,m2,m1+m2} of
// e(l1,m1) e(l2,m2) = sum_l M e(l, m1+m2), indexed by l = 0..n.
std::vector<SqrtRational> product_in_coupled_basis_exact(int n, int l1, int m1, int l2, int m2);
CoupledCoefficients product_in_coupled_basis(int n, int l1, int m1, int l2, int m2);

// Exhaustive exact check that commutators expand only over l of parity
// l1+l2+1 and anticommutators only over parity l1+l2.
struct ParityReport {
  bool pass = true;
  long pairs_checked = 0;
  std::string first_counterexample;
};
ParityReport verify_parity(int n);

}  // namespace spinsym::su2
