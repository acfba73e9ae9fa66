#pragma once

#include "spinsym/exact.hpp"
#include "spinsym/sphere.hpp"
#include "spinsym/su2_basis.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spinsym::corr {

using sphere::HarmonicVector;
using su2::MatrixXcd;

// One point of the moduli space (R*)^n: c[0] = 1, c[l] != 0 for 1 <= l <= n.
struct CharacteristicNumbers {
  int n = 0;
  std::vector<double> c;

  CharacteristicNumbers() = default;
  CharacteristicNumbers(int n_, std::vector<double> c_);
  double at(int l) const { return c[l]; }
};

enum class Family {
  StratonovichStandard,
  StratonovichAlternate,
  BerezinStandard,
  BerezinAlternate,
  ToeplitzStandard,
  ToeplitzAlternate,
};

// Stable CLI identifiers: stratonovich, stratonovich-alt, berezin,
// berezin-alt, toeplitz, toeplitz-alt.
std::string family_name(Family f);
Family family_from_name(const std::string& name);

// b_l^n = n! sqrt(n+1) / sqrt((n+l+1)!(n-l)!)
SqrtRational berezin_char_exact(int n, int l);
CharacteristicNumbers berezin_chars(int n);
CharacteristicNumbers family_chars(Family f, int n);

// Generator-backed characteristic numbers, validated (c_0 = 1 forced,
// c_l != 0 checked).
using Generator = std::function<double(int n, int l)>;
CharacteristicNumbers custom_chars(int n, const Generator& gen);
Generator family_generator(Family f);

// K = I/(n+1) + sum_{l>=1} c_l sqrt((2l+1)/(n+1)) e(l,0); diagonal, real,
// trace 1.
MatrixXcd operator_kernel(const CharacteristicNumbers& chars);

// Symbol map W: a_{lm} e(l,m) components map to a_{lm} c_l/sqrt(n+1) Y_l^m.
HarmonicVector symbol_of(const MatrixXcd& P, const CharacteristicNumbers& chars);
// Two-sided inverse of symbol_of on Poly_{<= n}.
MatrixXcd operator_of(const HarmonicVector& f, const CharacteristicNumbers& chars);

CharacteristicNumbers dual_chars(const CharacteristicNumbers& chars);

// U_{c,c'}(t) = (1/4pi) sum_l (c'_l/c_l)(2l+1) P_l(t), t = n1.n2.
double transition_kernel(const CharacteristicNumbers& c, const CharacteristicNumbers& cprime,
                         double t);

// |<W_P,W_Q> - sum_l c_l^2/(n+1) <P_l,Q_l>| with the left side evaluated by
// quadrature and the right side by traces.
double metric_identity_check(const MatrixXcd& P, const MatrixXcd& Q,
                             const CharacteristicNumbers& chars);

}  // namespace spinsym::corr
