#include "spinsym/trikernel.hpp"

#include "spinsym/twisted.hpp"
#include "spinsym/wigner.hpp"

#include <cmath>
#include <numbers>

namespace spinsym::trikernel {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Y_l^m tables for one point, index l*l+l+m, l <= n
std::vector<Complex> ylm_table(int n, const SpherePoint& p) {
  std::vector<Complex> t((n + 1) * (n + 1));
  for (int l = 0; l <= n; ++l) {
    for (int m = -l; m <= l; ++m) t[l * l + l + m] = sphere::eval_ylm(l, m, p);
  }
  return t;
}

// shared driver: sum over the constrained (l_i, m_i) index set with a
// family-dependent weight on (l1,l2,l3)
template <class WeightFn>
Complex coeff_form_sum(int n, const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
                       WeightFn&& weight) {
  const auto y1 = ylm_table(n, p1), y2 = ylm_table(n, p2), y3 = ylm_table(n, p3);
  Complex acc = 0.0;
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int l2 = 0; l2 <= n; ++l2) {
      for (int l3 = std::abs(l1 - l2); l3 <= std::min(l1 + l2, n); ++l3) {
        const double w_l = weight(l1, l2, l3);
        for (int m1 = -l1; m1 <= l1; ++m1) {
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > l3) continue;
            const double w = wigner::product_symbol_d(l1, m1, l2, m2, l3, m3, n);
            if (w == 0.0) continue;
            acc += w_l * w *
                   std::conj(y1[l1 * l1 + l1 + m1] * y2[l2 * l2 + l2 + m2] *
                             y3[l3 * l3 + l3 + m3]);
          }
        }
      }
    }
  }
  return acc * (sign_pow(n) * std::sqrt(double(n + 1)) / (kFourPi * kFourPi));
}

}  // namespace

Complex trikernel_coeff(const CharacteristicNumbers& chars, const SpherePoint& p1,
                        const SpherePoint& p2, const SpherePoint& p3) {
  return coeff_form_sum(chars.n, p1, p2, p3, [&](int l1, int l2, int l3) {
    return chars.at(l3) / (chars.at(l1) * chars.at(l2));
  });
}

Complex recursive_trikernel(const CharacteristicNumbers& chars, const SpherePoint& p1,
                            const SpherePoint& p2, const SpherePoint& p3) {
  return coeff_form_sum(chars.n, p1, p2, p3, [&](int l1, int l2, int l3) {
    return chars.at(l1) * chars.at(l2) * chars.at(l3);
  });
}

Complex invariant_L(int l1, int l2, int l3, const SpherePoint& p1, const SpherePoint& p2,
                    const SpherePoint& p3) {
  if (l1 < 0 || l2 < 0 || l3 < 0) throw DomainError("invariant_L: negative l");
  if (!triangle_ok(2L * l1, 2L * l2, 2L * l3)) {
    throw TriangleViolation("invariant_L: triangle condition fails");
  }
  const int L = l1 + l2 + l3;
  const double a = sphere::dot(p1, p3);
  const double b = sphere::dot(p2, p3);
  const double c = sphere::dot(p1, p2);
  const double det = sphere::triple_det(p1, p2, p3);
  const Complex tau12(c - a * b, -det);  // T(n1,n2,n3)
  const Complex tau21(c - a * b, det);   // T(n2,n1,n3)

  Complex acc = wigner::wigner_3jm(2L * l1, 0, 2L * l2, 0, 2L * l3, 0).to_double() *
                sphere::legendre(l1, a) * sphere::legendre(l2, b);
  for (int m = 1; m <= std::min(l1, l2); ++m) {
    const double w = wigner::wigner_3jm(2L * l1, 2L * m, 2L * l2, -2L * m, 2L * l3, 0).to_double();
    if (w == 0.0) continue;
    double factor = 1.0;
    for (auto [lk, t] : {std::pair{l1, a}, std::pair{l2, b}}) {
      double ratio = 1.0;
      for (int u = lk - m + 1; u <= lk + m; ++u) ratio /= u;
      factor *= std::sqrt(ratio) * sphere::assoc_legendre(lk, m, t) /
                std::pow(1.0 - t * t, m / 2.0);
    }
    Complex tpow = std::pow(tau12, m) + double(sign_pow(L)) * std::pow(tau21, m);
    acc += double(sign_pow(m)) * w * factor * tpow;
  }
  return acc * double((2 * l1 + 1) * (2 * l2 + 1) * (2 * l3 + 1));
}

Complex trikernel_invariant(const CharacteristicNumbers& chars, const SpherePoint& p1,
                            const SpherePoint& p2, const SpherePoint& p3) {
  const int n = chars.n;
  Complex acc = 0.0;
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int l2 = 0; l2 <= n; ++l2) {
      for (int l3 = std::abs(l1 - l2); l3 <= std::min(l1 + l2, n); ++l3) {
        const double sixj = wigner::wigner_6j_jjj(l1, l2, l3, n).to_double();
        if (sixj == 0.0) continue;
        acc += sixj * chars.at(l3) / (chars.at(l1) * chars.at(l2)) *
               invariant_L(l1, l2, l3, p1, p2, p3);
      }
    }
  }
  return acc * (sign_pow(n) * std::sqrt(double(n + 1)) / (kFourPi * kFourPi));
}

Complex wildberger_closed(int n, const SpherePoint& p1, const SpherePoint& p2,
                          const SpherePoint& p3) {
  if (n < 0) throw DomainError("wildberger_closed: negative n");
  const double X = sphere::dot(p1, p2) + sphere::dot(p2, p3) + sphere::dot(p3, p1);
  const Complex base(1.0 + X, sphere::triple_det(p1, p2, p3));
  const double pref = double(n + 1) / (std::pow(2.0, n) * kFourPi);
  return pref * pref * std::pow(base, n);
}

namespace {

HarmonicVector scale_by_berezin_power(const HarmonicVector& f, int power) {
  const int n = f.cap();
  HarmonicVector out(n);
  for (int l = 0; l <= n; ++l) {
    const double b = corr::berezin_char_exact(n, l).to_double();
    const double s = std::pow(b, power);
    for (int m = -l; m <= l; ++m) out.set(l, m, f.at(l, m) * s);
  }
  return out;
}

}  // namespace

// composed as the square of the Stratonovich-Berezin transform, which this
// transform is; keeps the coefficient actions bit-identical
HarmonicVector berezin_transform(const HarmonicVector& f) {
  return scale_by_berezin_power(scale_by_berezin_power(f, 1), 1);
}

HarmonicVector berezin_transform_inverse(const HarmonicVector& f) {
  return scale_by_berezin_power(scale_by_berezin_power(f, -1), -1);
}

HarmonicVector berezin_transform_integral(const HarmonicVector& f, const QuadratureGrid& grid) {
  const int n = f.cap();
  if (grid.degree < 2 * n) throw GridTooCoarse("berezin_transform_integral: grid degree < 2n");
  // B[f](p) = ((n+1)/4pi) int ((1+p.q)/2)^n f(q) dq, then re-expand
  const auto transformed = [&](const SpherePoint& p) {
    return grid.integrate([&](const SpherePoint& q) {
             return std::pow((1.0 + sphere::dot(p, q)) / 2.0, n) * f.eval(q);
           }) *
           (double(n + 1) / kFourPi);
  };
  HarmonicVector out(n);
  for (int l = 0; l <= n; ++l) {
    for (int m = -l; m <= l; ++m) {
      const Complex coeff = grid.integrate([&](const SpherePoint& p) {
                              return std::conj(sphere::eval_ylm(l, m, p)) * transformed(p);
                            }) /
                            kFourPi;
      out.set(l, m, coeff);
    }
  }
  return out;
}

HarmonicVector bs_transform(const HarmonicVector& f) { return scale_by_berezin_power(f, -1); }

HarmonicVector sb_transform(const HarmonicVector& f) { return scale_by_berezin_power(f, 1); }

double integral_product_check(const HarmonicVector& f, const HarmonicVector& g,
                              const CharacteristicNumbers& chars, const QuadratureGrid& grid,
                              const std::vector<SpherePoint>& samples) {
  const int n = chars.n;
  if (grid.degree < 2 * n) throw GridTooCoarse("integral_product_check: grid degree < 2n");
  const HarmonicVector direct = twisted::twisted_product(f, g, chars);

  // cache f, g at the grid nodes
  const size_t nn = grid.nodes.size();
  std::vector<Complex> fv(nn), gv(nn);
  for (size_t i = 0; i < nn; ++i) {
    fv[i] = f.eval(grid.nodes[i]);
    gv[i] = g.eval(grid.nodes[i]);
  }

  double worst = 0.0;
  for (const auto& p : samples) {
    Complex integral = 0.0;
    for (size_t i = 0; i < nn; ++i) {
      if (fv[i] == Complex(0.0)) continue;
      Complex inner = 0.0;
      for (size_t k = 0; k < nn; ++k) {
        inner += grid.weights[k] * gv[k] * trikernel_coeff(chars, grid.nodes[i], grid.nodes[k], p);
      }
      integral += grid.weights[i] * fv[i] * inner;
    }
    worst = std::max(worst, std::abs(integral - direct.eval(p)));
  }
  return worst;
}

}  // namespace spinsym::trikernel
