#include "spinsym/sphere.hpp"

#include "spinsym/wigner.hpp"

#include <cmath>
#include <numbers>

namespace spinsym::sphere {

namespace {

constexpr double kPi = std::numbers::pi;

double checked_z(double z, const char* who) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError(std::string(who) + ": |z| > 1");
  return std::clamp(z, -1.0, 1.0);
}

double factorial_ratio_d(int a, int b) {
  // a!/b! as a double, by direct product
  double r = 1.0;
  if (a >= b) {
    for (int t = b + 1; t <= a; ++t) r *= t;
  } else {
    for (int t = a + 1; t <= b; ++t) r /= t;
  }
  return r;
}

}  // namespace

SpherePoint SpherePoint::from_angles(double theta, double phi) {
  SpherePoint p;
  p.theta = theta;
  p.phi = phi;
  const double s = std::sin(phi);
  p.x = s * std::cos(theta);
  p.y = s * std::sin(theta);
  p.z = std::cos(phi);
  return p;
}

SpherePoint SpherePoint::from_xyz(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r < 1e-300) throw DomainError("SpherePoint: zero vector");
  SpherePoint p;
  p.x = x / r;
  p.y = y / r;
  p.z = z / r;
  p.phi = std::acos(std::clamp(p.z, -1.0, 1.0));
  p.theta = std::atan2(p.y, p.x);
  if (p.theta < 0) p.theta += 2 * kPi;
  return p;
}

double triple_det(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
         a.z * (b.x * c.y - b.y * c.x);
}

double legendre(int l, double z) {
  if (l < 0) throw DomainError("legendre: negative degree");
  z = checked_z(z, "legendre");
  if (l == 0) return 1.0;
  double pm1 = 1.0, p0 = z;
  for (int k = 2; k <= l; ++k) {
    const double p1 = ((2 * k - 1) * z * p0 - (k - 1) * pm1) / k;
    pm1 = p0;
    p0 = p1;
  }
  return p0;
}

double legendre_deriv(int l, double z) {
  if (l == 0) return 0.0;
  z = checked_z(z, "legendre_deriv");
  // (1-z^2) P_l' = l (P_{l-1} - z P_l)
  const double denom = 1.0 - z * z;
  if (denom < 1e-14) {
    // endpoint value l(l+1)/2 * (sign pattern); callers stay interior
    const double v = 0.5 * l * (l + 1);
    return z > 0 ? v : (l % 2 == 0 ? -v : v);
  }
  return l * (legendre(l - 1, z) - z * legendre(l, z)) / denom;
}

double assoc_legendre(int l, int m, double z) {
  if (l < 0 || std::abs(m) > l) throw DomainError("assoc_legendre: |m| > l");
  z = checked_z(z, "assoc_legendre");
  if (m < 0) {
    return sign_pow(-m) * factorial_ratio_d(l + m, l - m) * assoc_legendre(l, -m, z);
  }
  if (m == 0) return legendre(l, z);
  // seed P_m^m = (-1)^m (2m-1)!! (1-z^2)^{m/2}, then raise l
  double pmm = 1.0;
  const double s2 = 1.0 - z * z;
  for (int k = 1; k <= m; ++k) pmm *= -(2 * k - 1) * std::sqrt(s2);
  if (l == m) return pmm;
  double pm1 = pmm;
  double p0 = z * (2 * m + 1) * pmm;
  for (int k = m + 2; k <= l; ++k) {
    const double p1 = ((2 * k - 1) * z * p0 - (k + m - 1) * pm1) / (k - m);
    pm1 = p0;
    p0 = p1;
  }
  return p0;
}

double assoc_legendre_deriv(int l, int m, double z) {
  z = checked_z(z, "assoc_legendre_deriv");
  const double denom = 1.0 - z * z;
  if (denom < 1e-14) throw DomainError("assoc_legendre_deriv: |z| too close to 1");
  // (1-z^2) dP_l^m/dz = (l+m) P_{l-1}^m - l z P_l^m
  const double plm1 = (l - 1 >= std::abs(m)) ? assoc_legendre(l - 1, m, z) : 0.0;
  return ((l + m) * plm1 - l * z * assoc_legendre(l, m, z)) / denom;
}

Complex eval_ylm(int l, int m, const SpherePoint& p) {
  if (l < 0 || std::abs(m) > l) throw DomainError("eval_ylm: |m| > l");
  const double norm = std::sqrt((2 * l + 1) * factorial_ratio_d(l - m, l + m));
  const double plm = assoc_legendre(l, m, std::cos(p.phi));
  return norm * plm * std::polar(1.0, m * p.theta);
}

HarmonicVector HarmonicVector::basis(int n, int l, int m, Complex coeff) {
  HarmonicVector f(n);
  f.set(l, m, coeff);
  return f;
}

HarmonicVector HarmonicVector::constant(int n, Complex value) {
  HarmonicVector f(n);
  f.set(0, 0, value);
  return f;
}

int HarmonicVector::degree() const {
  for (int l = n_; l >= 0; --l) {
    for (int m = -l; m <= l; ++m) {
      if (c_[l * l + l + m] != Complex(0.0)) return l;
    }
  }
  return 0;
}

bool HarmonicVector::is_real_symbol(double tol) const {
  for (int l = 0; l <= n_; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex lhs = at(l, -m);
      const Complex rhs = double(sign_pow(m)) * std::conj(at(l, m));
      if (std::abs(lhs - rhs) > tol) return false;
    }
  }
  return true;
}

Complex HarmonicVector::eval(const SpherePoint& p) const {
  Complex acc = 0.0;
  for (int l = 0; l <= n_; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex v = at(l, m);
      if (v != Complex(0.0)) acc += v * eval_ylm(l, m, p);
    }
  }
  return acc;
}

HarmonicVector HarmonicVector::conjugated() const {
  HarmonicVector out(n_);
  for (int l = 0; l <= n_; ++l) {
    for (int m = -l; m <= l; ++m) {
      out.set(l, m, double(sign_pow(m)) * std::conj(at(l, -m)));
    }
  }
  return out;
}

HarmonicVector HarmonicVector::resized(int new_cap) const {
  HarmonicVector out(new_cap);
  const int l_max = std::min(new_cap, n_);
  for (int l = 0; l <= l_max; ++l) {
    for (int m = -l; m <= l; ++m) out.set(l, m, at(l, m));
  }
  return out;
}

HarmonicVector& HarmonicVector::operator+=(const HarmonicVector& o) {
  if (o.n_ != n_) throw DimensionMismatch("HarmonicVector: cap mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

HarmonicVector& HarmonicVector::operator-=(const HarmonicVector& o) {
  if (o.n_ != n_) throw DimensionMismatch("HarmonicVector: cap mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

HarmonicVector& HarmonicVector::operator*=(Complex s) {
  for (auto& v : c_) v *= s;
  return *this;
}

double HarmonicVector::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& v : c_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// shared bilinear expansion driver for the two classical products
template <class CoeffFn>
HarmonicVector classical_expand(const HarmonicVector& f, const HarmonicVector& g, int cap,
                                int parity_shift, CoeffFn&& lcoeff) {
  HarmonicVector out(cap);
  const int df = f.degree(), dg = g.degree();
  for (int l1 = 0; l1 <= df; ++l1) {
    for (int m1 = -l1; m1 <= l1; ++m1) {
      const Complex a = f.at(l1, m1);
      if (a == Complex(0.0)) continue;
      for (int l2 = 0; l2 <= dg; ++l2) {
        const double pref = std::sqrt(double(2 * l1 + 1) * (2 * l2 + 1));
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const Complex b = g.at(l2, m2);
          if (b == Complex(0.0)) continue;
          const int m = m1 + m2;
          int l_lo = std::max(std::abs(l1 - l2), std::abs(m));
          if ((l1 + l2 + l_lo + parity_shift) % 2 != 0) ++l_lo;
          for (int l = l_lo; l <= std::min(l1 + l2, cap); l += 2) {
            const double k = lcoeff(l1, l2, l);
            if (k == 0.0) continue;
            const double cg =
                wigner::clebsch_gordan_d(2 * l1, 2 * m1, 2 * l2, 2 * m2, 2 * l, 2 * m);
            out.add(l, m, a * b * (pref / std::sqrt(double(2 * l + 1)) * cg * k));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

HarmonicVector pointwise_product(const HarmonicVector& f, const HarmonicVector& g, int cap) {
  return classical_expand(f, g, cap, 0,
                          [](int l1, int l2, int l) { return wigner::cg_000_d(l1, l2, l); });
}

HarmonicVector poisson_bracket(const HarmonicVector& f, const HarmonicVector& g, int cap) {
  HarmonicVector ibracket = classical_expand(
      f, g, cap, 1, [](int l1, int l2, int l) { return wigner::poisson_p_d(l1, l2, l); });
  return ibracket * Complex(0.0, -1.0);  // computed i{f,g}; return {f,g}
}

QuadratureGrid build_grid(int degree) {
  if (degree < 0) throw DomainError("build_grid: negative degree");
  QuadratureGrid grid;
  grid.degree = degree;
  const int n_phi = (degree + 2) / 2;  // Gauss-Legendre exact through 2*n_phi-1 >= degree
  const int n_theta = degree + 1;

  std::vector<double> xs(n_phi), ws(n_phi);
  for (int i = 0; i < n_phi; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n_phi + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const double p = legendre(n_phi, x);
      const double dp = legendre_deriv(n_phi, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double dp = legendre_deriv(n_phi, x);
    xs[i] = x;
    ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }

  const double w_theta = 2.0 * kPi / n_theta;
  grid.nodes.reserve(n_phi * n_theta);
  grid.weights.reserve(n_phi * n_theta);
  for (int i = 0; i < n_phi; ++i) {
    const double phi = std::acos(xs[i]);
    for (int k = 0; k < n_theta; ++k) {
      grid.nodes.push_back(SpherePoint::from_angles(2.0 * kPi * k / n_theta, phi));
      grid.weights.push_back(ws[i] * w_theta);
    }
  }
  return grid;
}

}  // namespace spinsym::sphere
