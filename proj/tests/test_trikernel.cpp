#include "spinsym/trikernel.hpp"

#include "spinsym/twisted.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace spinsym;
using namespace spinsym::trikernel;
using corr::Family;
using sphere::Complex;
using sphere::HarmonicVector;
using sphere::SpherePoint;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<SpherePoint> random_points(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<SpherePoint> pts;
  while ((int)pts.size() < count) {
    const double x = u(rng), y = u(rng), z = u(rng);
    if (x * x + y * y + z * z < 1e-3) continue;
    pts.push_back(SpherePoint::from_xyz(x, y, z));
  }
  return pts;
}

double inv_x(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
  return sphere::dot(a, b) + sphere::dot(b, c) + sphere::dot(c, a);
}

// closed forms of the standard Stratonovich trikernel at j = 1/2 and j = 1
Complex strat_half_closed(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
  const double det = sphere::triple_det(a, b, c);
  return (Complex(1.0 + 3.0 * inv_x(a, b, c), 3.0 * std::sqrt(3.0) * det)) / std::pow(4 * kPi, 2);
}

Complex strat_one_closed(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
  const double X = inv_x(a, b, c);
  const double det = sphere::triple_det(a, b, c);
  const double Z = std::pow(sphere::dot(a, b), 2) + std::pow(sphere::dot(b, c), 2) +
                   std::pow(sphere::dot(c, a), 2) - 1.0;
  const double re = 1.0 + 3.0 * X + 7.5 * Z +
                    std::sqrt(10.0) / 8.0 *
                        (std::pow(3.0 * X - 1.0, 2) - 24.0 * Z - 45.0 * det * det);
  const double im = 9.0 * std::sqrt(2.0) / 4.0 * (1.0 + 5.0 * X) * det;
  return Complex(re, im) / std::pow(4 * kPi, 2);
}

const std::vector<Family> kFamilies = {
    Family::StratonovichStandard, Family::StratonovichAlternate, Family::BerezinStandard,
    Family::BerezinAlternate,     Family::ToeplitzStandard,      Family::ToeplitzAlternate};

}  // namespace

TEST_CASE("invariant building block pinned forms") {
  const auto pts = random_points(15, 7);
  for (size_t i = 0; i + 2 < pts.size(); i += 3) {
    const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    const double cab = sphere::dot(a, b);
    CHECK(std::abs(invariant_L(0, 0, 0, a, b, c) - 1.0) < 1e-12);
    CHECK(std::abs(invariant_L(1, 1, 0, a, b, c) - (-3.0 * std::sqrt(3.0) * cab)) < 1e-10);
    const Complex l111(0.0, 9.0 * std::sqrt(1.5) * sphere::triple_det(a, b, c));
    CHECK(std::abs(invariant_L(1, 1, 1, a, b, c) - l111) < 1e-10);
    const double l220 = 5.0 * std::sqrt(5.0) * 0.5 * (3.0 * cab * cab - 1.0);
    CHECK(std::abs(invariant_L(2, 2, 0, a, b, c) - l220) < 1e-10);
  }
  CHECK_THROWS_AS(invariant_L(1, 1, 3, pts[0], pts[1], pts[2]), TriangleViolation);
}

TEST_CASE("invariant building block parity and covariance") {
  const auto pts = random_points(9, 13);
  for (size_t i = 0; i + 2 < pts.size(); i += 3) {
    const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    for (int l1 = 0; l1 <= 3; ++l1) {
      for (int l2 = 0; l2 <= 3; ++l2) {
        for (int l3 = std::abs(l1 - l2); l3 <= l1 + l2; ++l3) {
          const Complex v = invariant_L(l1, l2, l3, a, b, c);
          if ((l1 + l2 + l3) % 2 == 0) {
            CHECK(std::abs(v.imag()) < 1e-10);
          } else {
            CHECK(std::abs(v.real()) < 1e-10);
          }
          const Complex swapped = invariant_L(l2, l1, l3, b, a, c);
          CHECK(std::abs(v - double(sign_pow(l1 + l2 + l3)) * swapped) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("coefficient trikernel reproduces the closed j=1/2 and j=1 forms") {
  const auto e3 = SpherePoint::north_pole();
  const auto chars1 = corr::family_chars(Family::StratonovichStandard, 1);
  const Complex diag = trikernel_coeff(chars1, e3, e3, e3);
  CHECK(std::abs(diag - 10.0 / (16.0 * kPi * kPi)) < 1e-12);

  const auto pts = random_points(30, 17);
  const auto chars2 = corr::family_chars(Family::StratonovichStandard, 2);
  for (size_t i = 0; i + 2 < pts.size(); i += 3) {
    const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    CHECK(std::abs(trikernel_coeff(chars1, a, b, c) - strat_half_closed(a, b, c)) < 1e-11);
    CHECK(std::abs(trikernel_coeff(chars2, a, b, c) - strat_one_closed(a, b, c)) < 1e-11);
  }
}

TEST_CASE("coefficient and invariant routes agree") {
  const auto pts = random_points(12, 19);
  for (int n = 1; n <= 3; ++n) {
    for (Family fam : kFamilies) {
      const auto chars = corr::family_chars(fam, n);
      for (size_t i = 0; i + 2 < pts.size(); i += 3) {
        const Complex a = trikernel_coeff(chars, pts[i], pts[i + 1], pts[i + 2]);
        const Complex b = trikernel_invariant(chars, pts[i], pts[i + 1], pts[i + 2]);
        CHECK(std::abs(a - b) < 1e-10);
      }
    }
  }
}

TEST_CASE("trikernel is rotation invariant") {
  const auto pts = random_points(6, 23);
  const auto chars = corr::family_chars(Family::BerezinStandard, 2);
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 4; ++rep) {
    // a rotation from the QR factorization of a random matrix, det fixed to +1
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m(r, c) = u(rng);
    }
    Eigen::Matrix3d q = Eigen::HouseholderQR<Eigen::Matrix3d>(m).householderQ();
    if (q.determinant() < 0) q.col(0) *= -1.0;
    auto rot = [&](const SpherePoint& p) {
      const Eigen::Vector3d v = q * Eigen::Vector3d(p.x, p.y, p.z);
      return SpherePoint::from_xyz(v.x(), v.y(), v.z());
    };
    const Complex before = trikernel_coeff(chars, pts[0], pts[1], pts[2]);
    const Complex after = trikernel_coeff(chars, rot(pts[0]), rot(pts[1]), rot(pts[2]));
    CHECK(std::abs(before - after) < 1e-11);
  }
}

TEST_CASE("alternate family conjugates the trikernel") {
  const auto pts = random_points(9, 31);
  const auto pos = corr::family_chars(Family::BerezinStandard, 3);
  const auto alt = corr::family_chars(Family::BerezinAlternate, 3);
  for (size_t i = 0; i + 2 < pts.size(); i += 3) {
    const Complex a = trikernel_coeff(pos, pts[i], pts[i + 1], pts[i + 2]);
    const Complex b = trikernel_coeff(alt, pts[i], pts[i + 1], pts[i + 2]);
    CHECK(std::abs(b - std::conj(a)) < 1e-12);
  }
}

TEST_CASE("transposition conjugates the trikernel") {
  const auto pts = random_points(9, 37);
  for (Family fam : {Family::StratonovichStandard, Family::BerezinStandard}) {
    const auto chars = corr::family_chars(fam, 2);
    for (size_t i = 0; i + 2 < pts.size(); i += 3) {
      const Complex a = trikernel_coeff(chars, pts[i], pts[i + 1], pts[i + 2]);
      const Complex b = trikernel_coeff(chars, pts[i + 1], pts[i], pts[i + 2]);
      CHECK(std::abs(b - std::conj(a)) < 1e-12);
    }
  }
}

TEST_CASE("wildberger closed form") {
  const auto e3 = SpherePoint::north_pole();
  for (int n = 0; n <= 6; ++n) {
    CHECK(std::abs(wildberger_closed(n, e3, e3, e3) -
                   (n + 1.0) * (n + 1.0) / (16.0 * kPi * kPi)) < 1e-12);
  }
  const auto pts = random_points(15, 41);
  for (int n = 1; n <= 5; ++n) {
    const auto chars = corr::family_chars(Family::BerezinStandard, n);
    for (size_t i = 0; i + 2 < pts.size(); i += 3) {
      const Complex closed = wildberger_closed(n, pts[i], pts[i + 1], pts[i + 2]);
      const Complex series = recursive_trikernel(chars, pts[i], pts[i + 1], pts[i + 2]);
      CHECK(std::abs(closed - series) < 1e-10);
    }
  }
}

TEST_CASE("wildberger polar form") {
  const auto pts = random_points(9, 43);
  for (int n : {1, 3, 4}) {
    for (size_t i = 0; i + 2 < pts.size(); i += 3) {
      const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
      const Complex v = wildberger_closed(n, a, b, c);
      const double amp =
          std::pow((1 + sphere::dot(a, b)) * (1 + sphere::dot(b, c)) * (1 + sphere::dot(c, a)),
                   n / 2.0) /
          std::pow(2.0, 1.5 * n);
      CHECK(std::abs(std::abs(v) - (n + 1.0) * (n + 1.0) / (16 * kPi * kPi) * amp) < 1e-12);
      const double phase = n / 2.0 *
                           2.0 * std::arg(Complex(1.0 + inv_x(a, b, c), sphere::triple_det(a, b, c)));
      CHECK(std::abs(std::remainder(std::arg(v) - phase, 2 * kPi)) < 1e-12);
    }
  }
}

TEST_CASE("recursive trikernel symmetry and self-duality") {
  const auto pts = random_points(9, 47);
  const auto ber = corr::family_chars(Family::BerezinStandard, 3);
  const auto strat = corr::family_chars(Family::StratonovichStandard, 3);
  for (size_t i = 0; i + 2 < pts.size(); i += 3) {
    const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    const Complex v = recursive_trikernel(ber, a, b, c);
    CHECK(std::abs(v - recursive_trikernel(ber, c, a, b)) < 1e-12);
    CHECK(std::abs(v - recursive_trikernel(ber, b, c, a)) < 1e-12);
    // Stratonovich: c = 1/c, so recursive and bona-fide coincide
    CHECK(std::abs(recursive_trikernel(strat, a, b, c) - trikernel_coeff(strat, a, b, c)) <
          1e-12);
    // cyclic symmetry of the bona-fide Stratonovich trikernel
    CHECK(std::abs(trikernel_coeff(strat, a, b, c) - trikernel_coeff(strat, c, a, b)) < 1e-12);
  }
}

TEST_CASE("berezin transform routes agree") {
  const int n = 4;
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HarmonicVector f(n);
  for (int l = 0; l <= n; ++l) {
    for (int m = -l; m <= l; ++m) f.set(l, m, Complex(u(rng), u(rng)));
  }
  const auto grid = sphere::build_grid(2 * n + 2);
  const auto coeff_route = berezin_transform(f);
  const auto integral_route = berezin_transform_integral(f, grid);
  CHECK((coeff_route - integral_route).max_coeff_norm() < 1e-10);

  const auto one = HarmonicVector::constant(n, 1.0);
  CHECK((berezin_transform(one) - one).max_coeff_norm() < 1e-15);
  CHECK((berezin_transform_inverse(berezin_transform(f)) - f).max_coeff_norm() < 1e-13);
  CHECK_THROWS_AS(berezin_transform_integral(f, sphere::build_grid(2)), GridTooCoarse);
}

TEST_CASE("stratonovich-berezin transform identities") {
  const int n = 5;
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HarmonicVector f(n);
  for (int l = 0; l <= n; ++l) {
    for (int m = -l; m <= l; ++m) f.set(l, m, Complex(u(rng), u(rng)));
  }
  // SB o SB is exactly the Berezin transform in coefficient space
  const auto sb2 = sb_transform(sb_transform(f));
  const auto b = berezin_transform(f);
  for (int l = 0; l <= n; ++l) {
    for (int m = -l; m <= l; ++m) CHECK(sb2.at(l, m) == b.at(l, m));
  }
  CHECK((bs_transform(sb_transform(f)) - f).max_coeff_norm() < 1e-13);
}

TEST_CASE("legendre expansion of the berezin kernel") {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {3, 6, 9}) {
    for (int rep = 0; rep < 20; ++rep) {
      const double z = u(rng);
      double acc = 0.0;
      for (int l = 0; l <= n; ++l) {
        const double b2 = corr::berezin_char_exact(n, l).to_double();
        acc += b2 * b2 * (2 * l + 1) / (n + 1.0) * sphere::legendre(l, z);
      }
      CHECK(std::abs(acc - std::pow((1.0 + z) / 2.0, n)) < 1e-12);
    }
  }
}

TEST_CASE("double integral route matches the coefficient twisted product") {
  const int n = 2;
  const auto chars = corr::family_chars(Family::StratonovichStandard, n);
  const auto grid = sphere::build_grid(2 * n + 2);
  const auto f = HarmonicVector::basis(n, 1, 1);
  const auto g = HarmonicVector::basis(n, 1, -1);
  const auto samples = random_points(5, 67);
  CHECK(integral_product_check(f, g, chars, grid, samples) < 1e-8);
  CHECK_THROWS_AS(integral_product_check(f, g, chars, sphere::build_grid(2), samples),
                  GridTooCoarse);
}

TEST_CASE("trikernel marginal is the reproducing kernel") {
  const int n = 2;
  const auto chars = corr::family_chars(Family::BerezinStandard, n);
  const auto grid = sphere::build_grid(2 * n + 2);
  const auto pts = random_points(6, 71);
  for (size_t i = 0; i + 1 < pts.size(); i += 2) {
    const Complex marginal = grid.integrate([&](const SpherePoint& q) {
      return trikernel_coeff(chars, q, pts[i], pts[i + 1]);
    });
    CHECK(std::abs(marginal - twisted::reproducing_kernel(n, sphere::dot(pts[i], pts[i + 1]))) <
          1e-10);
  }
}

TEST_CASE("trikernel associativity identity by quadrature") {
  const int n = 1;
  const auto chars = corr::family_chars(Family::BerezinStandard, n);
  const auto grid = sphere::build_grid(2 * n + 2);
  const auto pts = random_points(8, 73);
  for (size_t i = 0; i + 3 < pts.size(); i += 4) {
    const auto &a = pts[i], &b = pts[i + 1], &c = pts[i + 2], &d = pts[i + 3];
    const Complex lhs = grid.integrate([&](const SpherePoint& q) {
      return trikernel_coeff(chars, a, b, q) * trikernel_coeff(chars, q, c, d);
    });
    const Complex rhs = grid.integrate([&](const SpherePoint& q) {
      return trikernel_coeff(chars, a, q, d) * trikernel_coeff(chars, b, c, q);
    });
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("bona-fide and recursive trikernels are linked by transition kernels") {
  for (int n : {1, 2}) {
    const auto chars = corr::family_chars(Family::BerezinStandard, n);
    const auto dual = corr::dual_chars(chars);
    const auto grid = sphere::build_grid(2 * n + 2);
    const auto pts = random_points(3, 79 + n);
    const auto &a = pts[0], &b = pts[1], &c = pts[2];
    Complex integral = 0.0;
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
      Complex inner = 0.0;
      for (size_t k = 0; k < grid.nodes.size(); ++k) {
        inner += grid.weights[k] *
                 corr::transition_kernel(chars, dual, sphere::dot(b, grid.nodes[k])) *
                 recursive_trikernel(chars, grid.nodes[i], grid.nodes[k], c);
      }
      integral += grid.weights[i] *
                  corr::transition_kernel(chars, dual, sphere::dot(a, grid.nodes[i])) * inner;
    }
    CHECK(std::abs(integral - trikernel_coeff(chars, a, b, c)) < 1e-9);
  }
}
