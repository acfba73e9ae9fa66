#include "spinsym/twisted.hpp"

#include "spinsym/wigner.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace spinsym;
using namespace spinsym::twisted;
using corr::Family;
using sphere::Complex;
using sphere::HarmonicVector;
using sphere::SpherePoint;

namespace {

HarmonicVector random_symbol(int n, int deg, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HarmonicVector f(n);
  for (int l = 0; l <= deg; ++l) {
    for (int m = -l; m <= l; ++m) f.set(l, m, Complex(u(rng), u(rng)));
  }
  return f;
}

const std::vector<Family> kFamilies = {
    Family::StratonovichStandard, Family::StratonovichAlternate, Family::BerezinStandard,
    Family::BerezinAlternate,     Family::ToeplitzStandard,      Family::ToeplitzAlternate};

double pi_n(int n) { return std::sqrt(double(n - 1) * (n + 3) / (double(n) * (n + 2))); }

}  // namespace

TEST_CASE("pinned standard products of linear harmonics") {
  for (int n : {2, 4, 7, 10}) {
    const auto chars = corr::family_chars(Family::StratonovichStandard, n);
    const auto y10 = HarmonicVector::basis(n, 1, 0);
    const auto prod = twisted_product(y10, y10, chars);
    CHECK(prod.at(2, 0).real() == doctest::Approx(pi_n(n) * 2.0 / std::sqrt(5.0)).epsilon(1e-13));
    CHECK(prod.at(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(prod.at(1, 0)) < 1e-14);
  }
}

TEST_CASE("pinned standard products are exact at n = 4 and 7") {
  for (int n : {4, 7}) {
    // coefficient of Y_2^0 in Y_1^0 * Y_1^0 is pi_n 2/sqrt(5); constant is 1
    const auto w0 = wigner::product_symbol(1, 0, 1, 0, 0, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n));
    CHECK(w0 == SqrtRational::one());
    const auto w2 = wigner::product_symbol(1, 0, 1, 0, 2, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n));
    const auto pin_exact =
        SqrtRational::sqrt_of(Rational((n - 1) * (n + 3), n * (n + 2)));
    CHECK(w2 == pin_exact * SqrtRational::sqrt_of(Rational(4, 5)));
    CHECK(wigner::product_symbol(1, 0, 1, 0, 1, 0, n).is_zero());

    // Y_1^{+1} * Y_1^{-1}: l = 2, 1, 0 coefficients (pi_n/sqrt5, -sqrt(3/n(n+2)), -1)
    const auto v2 = wigner::product_symbol(1, 1, 1, -1, 2, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n));
    CHECK(v2 == pin_exact * SqrtRational::sqrt_of(Rational(1, 5)));
    const auto v1 = wigner::product_symbol(1, 1, 1, -1, 1, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n));
    CHECK(v1 == SqrtRational(-1, Rational(3, n * (n + 2))));
    const auto v0 = wigner::product_symbol(1, 1, 1, -1, 0, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n));
    CHECK(v0 == SqrtRational::of_rational(-1));
  }
}

TEST_CASE("pinned berezin products are exact at n = 4 and 7") {
  for (int n : {4, 7}) {
    // scale the standard exact values by b_l / (b_1 b_1)
    const auto b1 = corr::berezin_char_exact(n, 1);
    const auto b2 = corr::berezin_char_exact(n, 2);
    const auto ratio2 = b2 * (b1 * b1).inverse();
    const auto ratio1 = b1.inverse();
    const auto ratio0 = (b1 * b1).inverse();
    const auto pin_exact = SqrtRational::sqrt_of(Rational((n - 1) * (n + 3), n * (n + 2)));

    // Y_1^0 *_b Y_1^0 = ((n-1)/n)(2/sqrt5) Y_2^0 + (n+2)/n
    const auto w2 = wigner::product_symbol(1, 0, 1, 0, 2, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n)) * ratio2;
    CHECK(w2 == SqrtRational::of_rational(Rational(n - 1, n)) *
                    SqrtRational::sqrt_of(Rational(4, 5)));
    const auto w0 = wigner::product_symbol(1, 0, 1, 0, 0, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n)) * ratio0;
    CHECK(w0 == SqrtRational::of_rational(Rational(n + 2, n)));

    // Y_1^{+1} *_b Y_1^{-1} = ((n-1)/n)(1/sqrt5) Y_2^0 - (sqrt3/n) Y_1^0 - (n+2)/n
    const auto v2 = wigner::product_symbol(1, 1, 1, -1, 2, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n)) * ratio2;
    CHECK(v2 == SqrtRational::of_rational(Rational(n - 1, n)) *
                    SqrtRational::sqrt_of(Rational(1, 5)));
    const auto v1 = wigner::product_symbol(1, 1, 1, -1, 1, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n)) * ratio1;
    CHECK(v1 == SqrtRational(-1, Rational(3, n * n)));
    const auto v0 = wigner::product_symbol(1, 1, 1, -1, 0, 0, n) *
                    SqrtRational::sqrt_of(Rational(n + 1)) * Rational(sign_pow(n)) * ratio0;
    CHECK(v0 == SqrtRational::of_rational(Rational(-(n + 2), n)));
    CHECK(pin_exact.sign() == 1);
  }
}

TEST_CASE("twisted product is unital") {
  const int n = 4;
  const auto one = HarmonicVector::constant(n, 1.0);
  for (Family fam : kFamilies) {
    const auto chars = corr::family_chars(fam, n);
    const auto f = random_symbol(n, 3, 71);
    CHECK((twisted_product(one, f, chars) - f).max_coeff_norm() < 1e-13);
    CHECK((twisted_product(f, one, chars) - f).max_coeff_norm() < 1e-13);
  }
}

TEST_CASE("cartesian commutator for the standard family") {
  for (int n : {1, 2, 5, 8}) {
    const auto chars = corr::family_chars(Family::StratonovichStandard, n);
    const auto x = coordinate_x(n), y = coordinate_y(n), z = coordinate_z(n);
    const auto comm = twisted_commutator(x, y, chars);
    const auto expected = z * Complex(0.0, 2.0 / std::sqrt(double(n) * (n + 2)));
    CHECK((comm - expected).max_coeff_norm() < 1e-14);
    CHECK(twisted_commutator(x, x, chars).max_coeff_norm() < 1e-15);
  }
}

TEST_CASE("commutator of even symbols is odd") {
  const int n = 5;
  const auto chars = corr::family_chars(Family::BerezinStandard, n);
  // even symbols: supported on even l only
  HarmonicVector f(n), g(n);
  std::mt19937 rng(81);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int l = 0; l <= n; l += 2) {
    for (int m = -l; m <= l; ++m) {
      f.set(l, m, Complex(u(rng), u(rng)));
      g.set(l, m, Complex(u(rng), u(rng)));
    }
  }
  const auto comm = twisted_commutator(f, g, chars);
  for (int l = 0; l <= n; l += 2) {
    for (int m = -l; m <= l; ++m) CHECK(std::abs(comm.at(l, m)) < 1e-13);
  }
}

TEST_CASE("cartesian closed forms") {
  auto std6 = cartesian_identities_check(Family::StratonovichStandard, 6);
  CHECK(std6.pass);
  CHECK(std6.sum_of_squares_constant == doctest::Approx(1.0).epsilon(1e-13));
  auto ber6 = cartesian_identities_check(Family::BerezinStandard, 6);
  CHECK(ber6.pass);
  CHECK(ber6.sum_of_squares_constant == doctest::Approx(8.0 / 6.0).epsilon(1e-13));
  // n = 1: x * x = 1/3
  const auto chars1 = corr::family_chars(Family::StratonovichStandard, 1);
  const auto xx = twisted_product(coordinate_x(1), coordinate_x(1), chars1);
  CHECK(xx.at(0, 0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(xx.degree() == 0);
}

TEST_CASE("reproducing kernel") {
  const int n = 4;
  CHECK(reproducing_kernel(n, 1.0) ==
        doctest::Approx((n + 1) * (n + 1) / (4 * std::numbers::pi)).epsilon(1e-13));
  const auto grid = sphere::build_grid(2 * n + 4);
  const auto f = HarmonicVector::basis(n, 3, 1);
  std::mt19937 rng(91);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 8; ++rep) {
    const auto p = SpherePoint::from_xyz(u(rng), u(rng), u(rng));
    const Complex projected = grid.integrate([&](const SpherePoint& q) {
      return reproducing_kernel(n, sphere::dot(p, q)) * f.eval(q);
    });
    CHECK(std::abs(projected - f.eval(p)) < 1e-10);
    // degree n+1 content is annihilated
    const auto high = HarmonicVector::basis(n + 1, n + 1, 0);
    const Complex killed = grid.integrate([&](const SpherePoint& q) {
      return reproducing_kernel(n, sphere::dot(p, q)) * high.eval(q);
    });
    CHECK(std::abs(killed) < 1e-10);
  }
}

TEST_CASE("symbol parity for all families") {
  for (Family fam : kFamilies) {
    const auto r = verify_symbol_parity(corr::family_chars(fam, 4));
    CHECK(r.pass);
  }
  CHECK(verify_symbol_parity(corr::family_chars(Family::BerezinStandard, 5)).pass);
}

TEST_CASE("alternate family reverses the product") {
  const int n = 4;
  const auto pos = corr::family_chars(Family::BerezinStandard, n);
  const auto alt = corr::family_chars(Family::BerezinAlternate, n);
  for (int l1 = 0; l1 <= n; ++l1) {
    for (int m1 = -l1; m1 <= l1; ++m1) {
      for (int l2 = 0; l2 <= n; ++l2) {
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const auto f = HarmonicVector::basis(n, l1, m1);
          const auto g = HarmonicVector::basis(n, l2, m2);
          const auto lhs = twisted_product(f, g, alt);
          const auto rhs = twisted_product(g, f, pos);
          CHECK((lhs - rhs).max_coeff_norm() < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("homomorphism property") {
  for (int n = 1; n <= 3; ++n) {
    for (Family fam : kFamilies) {
      const auto chars = corr::family_chars(fam, n);
      std::mt19937 rng(100 + n);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      su2::MatrixXcd p(n + 1, n + 1), q(n + 1, n + 1);
      for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) {
          p(r, c) = Complex(u(rng), u(rng));
          q(r, c) = Complex(u(rng), u(rng));
        }
      }
      const auto lhs = corr::symbol_of(p * q, chars);
      const auto rhs = twisted_product(corr::symbol_of(p, chars), corr::symbol_of(q, chars), chars);
      CHECK((lhs - rhs).max_coeff_norm() < 1e-11);
    }
  }
}

TEST_CASE("associativity on random triples") {
  const int n = 4;
  for (Family fam : {Family::StratonovichStandard, Family::BerezinStandard,
                     Family::ToeplitzAlternate}) {
    const auto chars = corr::family_chars(fam, n);
    const auto f = random_symbol(n, 2, 111);
    const auto g = random_symbol(n, 3, 112);
    const auto h = random_symbol(n, 2, 113);
    const auto lhs = twisted_product(twisted_product(f, g, chars), h, chars);
    const auto rhs = twisted_product(f, twisted_product(g, h, chars), chars);
    CHECK((lhs - rhs).max_coeff_norm() < 1e-10);
  }
}

TEST_CASE("star property") {
  const int n = 4;
  for (Family fam : kFamilies) {
    const auto chars = corr::family_chars(fam, n);
    const auto f = random_symbol(n, 3, 121);
    const auto g = random_symbol(n, 2, 122);
    const auto lhs = twisted_product(f, g, chars).conjugated();
    const auto rhs = twisted_product(g.conjugated(), f.conjugated(), chars);
    CHECK((lhs - rhs).max_coeff_norm() < 1e-12);
  }
}

TEST_CASE("covariant-contravariant duality of products") {
  const int n = 4;
  const auto chars = corr::family_chars(Family::BerezinStandard, n);
  const auto dual = corr::dual_chars(chars);
  auto tilde = [&](const HarmonicVector& f) {
    HarmonicVector out(n);
    for (int l = 0; l <= n; ++l) {
      for (int m = -l; m <= l; ++m) {
        out.set(l, m, f.at(l, m) / (chars.at(l) * chars.at(l)));
      }
    }
    return out;
  };
  const auto f = random_symbol(n, 2, 131);
  const auto g = random_symbol(n, 3, 132);
  const auto lhs = tilde(twisted_product(f, g, chars));
  const auto rhs = twisted_product(tilde(f), tilde(g), dual);
  CHECK((lhs - rhs).max_coeff_norm() < 1e-11);
}

TEST_CASE("degree guard") {
  const auto chars = corr::family_chars(Family::StratonovichStandard, 2);
  const auto f = HarmonicVector::basis(3, 3, 0);
  CHECK_THROWS_AS(twisted_product(f, f, chars), DegreeTooHigh);
}
