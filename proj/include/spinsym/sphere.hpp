#pragma once

#include "spinsym/exact.hpp"

#include <complex>
#include <vector>

namespace spinsym::sphere {

using Complex = std::complex<double>;

// Point on S^2: theta = longitude in [0,2pi), phi = colatitude in [0,pi],
// with cartesian coordinates x = sin(phi)cos(theta), y = sin(phi)sin(theta),
// z = cos(phi).
struct SpherePoint {
  double theta = 0.0, phi = 0.0;
  double x = 0.0, y = 0.0, z = 1.0;

  static SpherePoint from_angles(double theta, double phi);
  static SpherePoint from_xyz(double x, double y, double z);
  static SpherePoint north_pole() { return from_angles(0.0, 0.0); }
};

inline double dot(const SpherePoint& a, const SpherePoint& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
// det[n1, n2, n3]
double triple_det(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c);

// Legendre polynomial P_l(z), P_l(1) = 1; |z| <= 1.
double legendre(int l, double z);
double legendre_deriv(int l, double z);
// Associated Legendre P_l^m(z) with the (-1)^m factor; negative m via the
// factorial-ratio identity.
double assoc_legendre(int l, int m, double z);
// d/dz P_l^m(z), valid for |z| < 1.
double assoc_legendre_deriv(int l, int m, double z);

// Spherical harmonic Y_l^m with unit norm under (1/4pi) integral:
// sqrt(2l+1) sqrt((l-m)!/(l+m)!) P_l^m(cos phi) e^{i m theta}.
Complex eval_ylm(int l, int m, const SpherePoint& p);

// Finite coefficient vector f_{l,m}, 0 <= l <= n, |m| <= l.
class HarmonicVector {
 public:
  HarmonicVector() = default;
  explicit HarmonicVector(int n) : n_(n), c_((n + 1) * (n + 1), Complex(0.0)) {
    if (n < 0) throw DomainError("HarmonicVector: negative degree cap");
  }
  static HarmonicVector basis(int n, int l, int m, Complex coeff = 1.0);
  static HarmonicVector constant(int n, Complex value);

  int cap() const { return n_; }
  Complex at(int l, int m) const { return c_[index(l, m)]; }
  void set(int l, int m, Complex v) { c_[index(l, m)] = v; }
  void add(int l, int m, Complex v) { c_[index(l, m)] += v; }

  int degree() const;  // largest l carrying a nonzero coefficient
  bool is_real_symbol(double tol = 1e-12) const;
  Complex eval(const SpherePoint& p) const;
  // The involution f -> conj(f): coefficients (-1)^m conj(f_{l,-m}).
  HarmonicVector conjugated() const;
  HarmonicVector resized(int new_cap) const;  // truncates or zero-extends

  HarmonicVector& operator+=(const HarmonicVector& o);
  HarmonicVector& operator-=(const HarmonicVector& o);
  HarmonicVector& operator*=(Complex s);
  friend HarmonicVector operator+(HarmonicVector a, const HarmonicVector& b) { return a += b; }
  friend HarmonicVector operator-(HarmonicVector a, const HarmonicVector& b) { return a -= b; }
  friend HarmonicVector operator*(HarmonicVector a, Complex s) { return a *= s; }

  double max_coeff_norm() const;

 private:
  int index(int l, int m) const {
    if (l < 0 || l > n_ || std::abs(m) > l) throw DomainError("HarmonicVector: (l,m) out of range");
    return l * l + l + m;
  }
  int n_ = 0;
  std::vector<Complex> c_{Complex(0.0)};
};

// Coefficient-space pointwise product, truncated at degree cap; exact (up to
// roundoff) when cap >= deg f + deg g.
HarmonicVector pointwise_product(const HarmonicVector& f, const HarmonicVector& g, int cap);

// Coefficient-space Poisson bracket {f,g}, truncated at cap; antisymmetric.
HarmonicVector poisson_bracket(const HarmonicVector& f, const HarmonicVector& g, int cap);

// Product quadrature grid (Gauss-Legendre in cos phi x uniform theta),
// integrating spherical polynomials through the stated degree; weights sum
// to 4pi.
struct QuadratureGrid {
  int degree = 0;
  std::vector<SpherePoint> nodes;
  std::vector<double> weights;

  template <class F>
  auto integrate(F&& f) const {
    auto acc = decltype(f(nodes[0]))(0.0);
    for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

QuadratureGrid build_grid(int degree);

}  // namespace spinsym::sphere
