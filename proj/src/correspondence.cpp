#include "spinsym/correspondence.hpp"

#include <cmath>
#include <numbers>

namespace spinsym::corr {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

CharacteristicNumbers::CharacteristicNumbers(int n_, std::vector<double> c_)
    : n(n_), c(std::move(c_)) {
  if (n < 1) throw DomainError("CharacteristicNumbers: n must be >= 1");
  if (c.size() != static_cast<size_t>(n + 1)) {
    throw DomainError("CharacteristicNumbers: need n+1 entries");
  }
  if (c[0] != 1.0) throw DomainError("CharacteristicNumbers: c_0 must be 1");
  for (int l = 1; l <= n; ++l) {
    if (c[l] == 0.0 || !std::isfinite(c[l])) {
      throw DomainError("CharacteristicNumbers: c_l must be finite and nonzero");
    }
  }
}

std::string family_name(Family f) {
  switch (f) {
    case Family::StratonovichStandard: return "stratonovich";
    case Family::StratonovichAlternate: return "stratonovich-alt";
    case Family::BerezinStandard: return "berezin";
    case Family::BerezinAlternate: return "berezin-alt";
    case Family::ToeplitzStandard: return "toeplitz";
    case Family::ToeplitzAlternate: return "toeplitz-alt";
  }
  throw DomainError("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "stratonovich") return Family::StratonovichStandard;
  if (name == "stratonovich-alt") return Family::StratonovichAlternate;
  if (name == "berezin") return Family::BerezinStandard;
  if (name == "berezin-alt") return Family::BerezinAlternate;
  if (name == "toeplitz") return Family::ToeplitzStandard;
  if (name == "toeplitz-alt") return Family::ToeplitzAlternate;
  throw DomainError("unknown correspondence family: " + name);
}

SqrtRational berezin_char_exact(int n, int l) {
  if (n < 1 || l < 0 || l > n) throw DomainError("berezin_char_exact: need 0 <= l <= n");
  // (b_l^n)^2 = (n+1) prod_{t=1..l} (n-t+1) / prod_{t=1..l+1} (n+t)
  Rational r(n + 1);
  for (int t = 1; t <= l; ++t) r *= Rational(n - t + 1);
  for (int t = 1; t <= l + 1; ++t) r /= Rational(n + t);
  return SqrtRational::sqrt_of(r);
}

CharacteristicNumbers berezin_chars(int n) {
  std::vector<double> c(n + 1);
  for (int l = 0; l <= n; ++l) c[l] = berezin_char_exact(n, l).to_double();
  c[0] = 1.0;
  return CharacteristicNumbers(n, std::move(c));
}

CharacteristicNumbers family_chars(Family f, int n) {
  if (n < 1) throw DomainError("family_chars: n must be >= 1");
  std::vector<double> c(n + 1, 1.0);
  switch (f) {
    case Family::StratonovichStandard:
      break;
    case Family::StratonovichAlternate:
      for (int l = 0; l <= n; ++l) c[l] = sign_pow(l);
      break;
    case Family::BerezinStandard:
      return berezin_chars(n);
    case Family::BerezinAlternate: {
      auto b = berezin_chars(n);
      for (int l = 0; l <= n; ++l) c[l] = sign_pow(l) * b.c[l];
      break;
    }
    case Family::ToeplitzStandard: {
      auto b = berezin_chars(n);
      for (int l = 0; l <= n; ++l) c[l] = 1.0 / b.c[l];
      break;
    }
    case Family::ToeplitzAlternate: {
      auto b = berezin_chars(n);
      for (int l = 0; l <= n; ++l) c[l] = sign_pow(l) / b.c[l];
      break;
    }
  }
  c[0] = 1.0;
  return CharacteristicNumbers(n, std::move(c));
}

CharacteristicNumbers custom_chars(int n, const Generator& gen) {
  std::vector<double> c(n + 1);
  c[0] = 1.0;
  for (int l = 1; l <= n; ++l) c[l] = gen(n, l);
  return CharacteristicNumbers(n, std::move(c));
}

Generator family_generator(Family f) {
  switch (f) {
    case Family::StratonovichStandard:
      return [](int, int) { return 1.0; };
    case Family::StratonovichAlternate:
      return [](int, int l) { return double(sign_pow(l)); };
    case Family::BerezinStandard:
      return [](int n, int l) { return berezin_char_exact(n, l).to_double(); };
    case Family::BerezinAlternate:
      return [](int n, int l) { return sign_pow(l) * berezin_char_exact(n, l).to_double(); };
    case Family::ToeplitzStandard:
      return [](int n, int l) { return 1.0 / berezin_char_exact(n, l).to_double(); };
    case Family::ToeplitzAlternate:
      return [](int n, int l) { return sign_pow(l) / berezin_char_exact(n, l).to_double(); };
  }
  throw DomainError("family_generator: unknown family");
}

MatrixXcd operator_kernel(const CharacteristicNumbers& chars) {
  const int n = chars.n;
  MatrixXcd K = MatrixXcd::Identity(n + 1, n + 1) / double(n + 1);
  for (int l = 1; l <= n; ++l) {
    const double gamma = chars.at(l) * std::sqrt(double(2 * l + 1) / (n + 1));
    const auto& e = su2::coupled_basis(n, l, 0);
    for (int k = 0; k <= n; ++k) K(k, k) += gamma * e.diag_d[k];
  }
  return K;
}

HarmonicVector symbol_of(const MatrixXcd& P, const CharacteristicNumbers& chars) {
  if (P.rows() != chars.n + 1 || P.cols() != chars.n + 1) {
    throw DimensionMismatch("symbol_of: operator dimension != n+1");
  }
  const int n = chars.n;
  const auto coeffs = su2::decompose(P);
  HarmonicVector f(n);
  const double mu0 = std::sqrt(double(n + 1));
  for (int l = 0; l <= n; ++l) {
    for (int m = -l; m <= l; ++m) {
      f.set(l, m, coeffs.at(l, m) * (chars.at(l) / mu0));
    }
  }
  return f;
}

MatrixXcd operator_of(const HarmonicVector& f, const CharacteristicNumbers& chars) {
  const int n = chars.n;
  if (f.degree() > n) throw DegreeTooHigh("operator_of: symbol degree exceeds n");
  su2::CoupledCoefficients coeffs;
  coeffs.n = n;
  coeffs.a = su2::VectorXcd::Zero((n + 1) * (n + 1));
  const double mu0 = std::sqrt(double(n + 1));
  const int l_top = std::min(n, f.cap());
  for (int l = 0; l <= l_top; ++l) {
    for (int m = -l; m <= l; ++m) {
      coeffs.a[su2::CoupledCoefficients::index(l, m)] = f.at(l, m) * (mu0 / chars.at(l));
    }
  }
  return su2::reconstruct(coeffs);
}

CharacteristicNumbers dual_chars(const CharacteristicNumbers& chars) {
  std::vector<double> c(chars.n + 1);
  for (int l = 0; l <= chars.n; ++l) c[l] = 1.0 / chars.at(l);
  return CharacteristicNumbers(chars.n, std::move(c));
}

double transition_kernel(const CharacteristicNumbers& c, const CharacteristicNumbers& cprime,
                         double t) {
  if (c.n != cprime.n) throw DimensionMismatch("transition_kernel: n mismatch");
  if (std::abs(t) > 1.0 + 1e-12) throw DomainError("transition_kernel: |t| > 1");
  double acc = 0.0;
  for (int l = 0; l <= c.n; ++l) {
    acc += cprime.at(l) / c.at(l) * (2 * l + 1) * sphere::legendre(l, std::clamp(t, -1.0, 1.0));
  }
  return acc / kFourPi;
}

double metric_identity_check(const MatrixXcd& P, const MatrixXcd& Q,
                             const CharacteristicNumbers& chars) {
  const int n = chars.n;
  if (P.rows() != n + 1 || Q.rows() != n + 1) {
    throw DimensionMismatch("metric_identity_check: dimension mismatch");
  }
  const HarmonicVector wp = symbol_of(P, chars);
  const HarmonicVector wq = symbol_of(Q, chars);
  const auto grid = sphere::build_grid(2 * n + 2);
  const std::complex<double> lhs =
      grid.integrate([&](const sphere::SpherePoint& p) {
        return std::conj(wp.eval(p)) * wq.eval(p);
      }) /
      kFourPi;

  const auto ap = su2::decompose(P);
  const auto aq = su2::decompose(Q);
  std::complex<double> rhs = 0.0;
  for (int l = 0; l <= n; ++l) {
    std::complex<double> block = 0.0;
    for (int m = -l; m <= l; ++m) block += std::conj(ap.at(l, m)) * aq.at(l, m);
    rhs += chars.at(l) * chars.at(l) / double(n + 1) * block;
  }
  return std::abs(lhs - rhs);
}

}  // namespace spinsym::corr
