#include "spinsym/twisted.hpp"

#include "spinsym/wigner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace spinsym::twisted {

using sphere::Complex;

HarmonicVector twisted_product(const HarmonicVector& f, const HarmonicVector& g,
                               const CharacteristicNumbers& chars) {
  const int n = chars.n;
  const int df = f.degree(), dg = g.degree();
  if (df > n || dg > n) throw DegreeTooHigh("twisted_product: symbol degree exceeds n");
  HarmonicVector out(n);
  const double root = std::sqrt(double(n + 1));
  for (int l1 = 0; l1 <= df; ++l1) {
    for (int m1 = -l1; m1 <= l1; ++m1) {
      const Complex a = f.at(l1, m1);
      if (a == Complex(0.0)) continue;
      for (int l2 = 0; l2 <= dg; ++l2) {
        const double ratio_12 = chars.at(l1) * chars.at(l2);
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const Complex b = g.at(l2, m2);
          if (b == Complex(0.0)) continue;
          const int m = m1 + m2;
          const Complex ab = a * b;
          const int l_lo = std::max(std::abs(l1 - l2), std::abs(m));
          const int l_hi = std::min(l1 + l2, n);
          for (int l = l_lo; l <= l_hi; ++l) {
            const double w = wigner::product_symbol_d(l1, m1, l2, m2, l, -m, n);
            if (w == 0.0) continue;
            out.add(l, m, ab * (sign_pow(n + m) * root * w * chars.at(l) / ratio_12));
          }
        }
      }
    }
  }
  return out;
}

HarmonicVector twisted_commutator(const HarmonicVector& f, const HarmonicVector& g,
                                  const CharacteristicNumbers& chars) {
  return twisted_product(f, g, chars) - twisted_product(g, f, chars);
}

HarmonicVector twisted_anticommutator(const HarmonicVector& f, const HarmonicVector& g,
                                      const CharacteristicNumbers& chars) {
  return twisted_product(f, g, chars) + twisted_product(g, f, chars);
}

// x = (Y_{1,-1} - Y_{1,1})/sqrt(6), y = i(Y_{1,1} + Y_{1,-1})/sqrt(6),
// z = Y_{1,0}/sqrt(3)
HarmonicVector coordinate_x(int n) {
  HarmonicVector f(n);
  const double s = 1.0 / std::sqrt(6.0);
  f.set(1, -1, s);
  f.set(1, 1, -s);
  return f;
}

HarmonicVector coordinate_y(int n) {
  HarmonicVector f(n);
  const Complex is(0.0, 1.0 / std::sqrt(6.0));
  f.set(1, 1, is);
  f.set(1, -1, is);
  return f;
}

HarmonicVector coordinate_z(int n) {
  HarmonicVector f(n);
  f.set(1, 0, 1.0 / std::sqrt(3.0));
  return f;
}

CartesianReport cartesian_identities_check(corr::Family family, int n, double tol) {
  if (n < 1) throw DomainError("cartesian_identities_check: n must be >= 1");
  if (family != corr::Family::StratonovichStandard && family != corr::Family::BerezinStandard) {
    throw DomainError("cartesian_identities_check: standard Stratonovich or Berezin only");
  }
  const bool berezin = (family == corr::Family::BerezinStandard);
  const auto chars = corr::family_chars(family, n);

  const HarmonicVector coords[3] = {coordinate_x(n), coordinate_y(n), coordinate_z(n)};
  CartesianReport report;

  const double pi_n =
      berezin ? double(n - 1) / n
              : (n >= 2 ? std::sqrt(double(n - 1) * (n + 3) / (double(n) * (n + 2))) : 0.0);
  const double comm_coef = berezin ? 1.0 / n : 1.0 / std::sqrt(double(n) * (n + 2));
  const double diag_shift = berezin ? 1.0 / n : (1.0 - pi_n) / 3.0;

  auto record = [&](double err, const char* what, int a, int b) {
    report.max_error = std::max(report.max_error, err);
    if (err > tol && report.pass) {
      report.pass = false;
      std::ostringstream os;
      os << what << " (" << a << "," << b << ") err=" << err;
      report.detail = os.str();
    }
  };

  HarmonicVector sum_squares(n);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const HarmonicVector prod = twisted_product(coords[a], coords[b], chars);
      if (a == b) sum_squares += prod;
      // epsilon_{abc}: sign of the permutation taking (x,y,z) to (a,b,c)
      HarmonicVector expected(n);
      if (a != b) {
        const int c = 3 - a - b;
        const double eps = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
        expected = sphere::pointwise_product(coords[a], coords[b], n) * Complex(pi_n) +
                   coords[c] * Complex(0.0, eps * comm_coef);
      } else {
        expected = sphere::pointwise_product(coords[a], coords[a], n) * Complex(pi_n) +
                   HarmonicVector::constant(n, diag_shift);
      }
      record((prod - expected).max_coeff_norm(), "product", a, b);
    }
  }

  const double expected_constant = berezin ? double(n + 2) / n : 1.0;
  report.sum_of_squares_constant = sum_squares.at(0, 0).real();
  HarmonicVector target = HarmonicVector::constant(n, expected_constant);
  record((sum_squares - target).max_coeff_norm(), "sum-of-squares", 0, 0);
  return report;
}

double reproducing_kernel(int n, double t) {
  if (std::abs(t) > 1.0 + 1e-12) throw DomainError("reproducing_kernel: |t| > 1");
  double acc = 0.0;
  for (int l = 0; l <= n; ++l) acc += (2 * l + 1) * sphere::legendre(l, std::clamp(t, -1.0, 1.0));
  return acc / (4.0 * std::numbers::pi);
}

SymbolParityReport verify_symbol_parity(const CharacteristicNumbers& chars, double tol) {
  const int n = chars.n;
  SymbolParityReport report;
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int m1 = -l1; m1 <= l1; ++m1) {
      const auto f = HarmonicVector::basis(n, l1, m1);
      for (int l2 = 0; l2 <= n; ++l2) {
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const auto g = HarmonicVector::basis(n, l2, m2);
          const auto comm = twisted_commutator(f, g, chars);
          const auto anti = twisted_anticommutator(f, g, chars);
          for (int l = std::abs(m1 + m2); l <= n; ++l) {
            const bool same_parity = ((l1 + l2 + l) % 2 == 0);
            const double bad = same_parity ? std::abs(comm.at(l, m1 + m2))
                                           : std::abs(anti.at(l, m1 + m2));
            report.max_violation = std::max(report.max_violation, bad);
            if (bad > tol && report.pass) {
              report.pass = false;
              std::ostringstream os;
              os << "n=" << n << " (l1,m1,l2,m2,l)=(" << l1 << "," << m1 << "," << l2 << ","
                 << m2 << "," << l << ") violation=" << bad;
              report.first_counterexample = os.str();
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace spinsym::twisted
