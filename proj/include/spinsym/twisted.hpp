#pragma once

#include "spinsym/correspondence.hpp"
#include "spinsym/sphere.hpp"

#include <string>

namespace spinsym::twisted {

using corr::CharacteristicNumbers;
using sphere::HarmonicVector;

// Twisted product f * g induced by the correspondence with the given
// characteristic numbers; bilinear expansion over the Wigner product symbols.
// Throws DegreeTooHigh when deg f or deg g exceeds n.
HarmonicVector twisted_product(const HarmonicVector& f, const HarmonicVector& g,
                               const CharacteristicNumbers& chars);

HarmonicVector twisted_commutator(const HarmonicVector& f, const HarmonicVector& g,
                                  const CharacteristicNumbers& chars);
HarmonicVector twisted_anticommutator(const HarmonicVector& f, const HarmonicVector& g,
                                      const CharacteristicNumbers& chars);

// The cartesian coordinate functions as symbols of degree cap n.
HarmonicVector coordinate_x(int n);
HarmonicVector coordinate_y(int n);
HarmonicVector coordinate_z(int n);

// Checks the closed-form products of the cartesian coordinates for the
// standard Stratonovich-Weyl family (pi_n forms, sum of squares 1) or the
// standard Berezin family ((n-1)/n forms, sum of squares (n+2)/n).
struct CartesianReport {
  bool pass = true;
  double max_error = 0.0;
  double sum_of_squares_constant = 0.0;
  std::string detail;
};
CartesianReport cartesian_identities_check(corr::Family family, int n, double tol = 1e-12);

// Reproducing kernel of Poly_{<=n}: (1/4pi) sum_{l<=n} (2l+1) P_l(t).
double reproducing_kernel(int n, double t);

// Verifies, on all basis pairs, that twisted commutators live on l-blocks of
// parity l1+l2+1 and anticommutators on parity l1+l2.
struct SymbolParityReport {
  bool pass = true;
  double max_violation = 0.0;
  std::string first_counterexample;
};
SymbolParityReport verify_symbol_parity(const CharacteristicNumbers& chars, double tol = 1e-12);

}  // namespace spinsym::twisted
