#include "spinsym/su2_basis.hpp"

#include "spinsym/wigner.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace spinsym::su2 {

namespace {

void check_n(int n) {
  if (n < 1) throw DomainError("su2: n must be >= 1");
}

void check_lm(int n, int l, int m) {
  if (l < 0 || l > n || std::abs(m) > l) throw DomainError("su2: (l,m) out of range");
}

// squared gap weight between basis indices x and x+1 (1-based), from the
// subdiagonal entries of J-: s(x)^2 = x(n+1-x)
long gap2(int n, long x) { return x * (n + 1 - x); }

// Exact entry of the shift product J-^a J+^l J-^b at the column c (1-based);
// every factor lives on a single diagonal so the entry is one path product.
// Returns zero when the path leaves [1, n+1].
SqrtRational shift_product_entry(int n, int a, int l, int b, long c) {
  if (c + b > n + 1 || c + b - l < 1) return SqrtRational::zero();
  Rational w2 = 1;
  for (long t = 0; t < b; ++t) w2 *= gap2(n, c + t);
  for (long t = 1; t <= l; ++t) w2 *= gap2(n, c + b - t);
  for (long t = 0; t < a; ++t) w2 *= gap2(n, c + b - l + t);
  return SqrtRational::sqrt_of(w2);
}

BasisMatrix build_basis(int n, int l, int m) {
  // m >= 0 here; the k-sum of the closed formula stays in one radical
  // lattice per entry, so restricted addition is exact.
  BasisMatrix e;
  e.n = n;
  e.offset = m;
  e.diag.resize(n + 1 - m);
  const SqrtRational scale =
      mu_norm(n, l, m).inverse() * Rational(sign_pow(l));
  for (int i = 1; i <= n + 1 - m; ++i) {
    const long c = i + m;
    SqrtRational sum = SqrtRational::zero();
    for (int k = 0; k <= l - m; ++k) {
      Rational binom(factorial(l - m), factorial(k) * factorial(l - m - k));
      SqrtRational term = shift_product_entry(n, l - m - k, l, k, c) * (binom * sign_pow(k));
      sum = sum + term;
    }
    e.diag[i - 1] = sum * scale;
  }
  e.refresh_float();
  return e;
}

std::shared_mutex g_basis_mutex;
std::map<std::tuple<int, int, int>, BasisMatrix> g_basis_cache;

}  // namespace

BasisMatrix BasisMatrix::transposed() const {
  BasisMatrix t(*this);
  t.offset = -offset;
  return t;
}

BasisMatrix BasisMatrix::scaled(const SqrtRational& s) const {
  BasisMatrix r(*this);
  for (auto& v : r.diag) v = v * s;
  r.refresh_float();
  return r;
}

MatrixXcd BasisMatrix::to_dense() const {
  MatrixXcd out = MatrixXcd::Zero(n + 1, n + 1);
  for (int k = 0; k < length(); ++k) {
    auto [r, c] = position(k);
    out(r, c) = diag_d[k];
  }
  return out;
}

void BasisMatrix::refresh_float() {
  diag_d.resize(diag.size());
  for (size_t i = 0; i < diag.size(); ++i) diag_d[i] = diag[i].to_double();
}

MatrixXcd j3_matrix(int n) {
  check_n(n);
  MatrixXcd m = MatrixXcd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) m(k, k) = (n - 2.0 * k) / 2.0;
  return m;
}

MatrixXcd jminus_matrix(int n) {
  check_n(n);
  MatrixXcd m = MatrixXcd::Zero(n + 1, n + 1);
  for (int k = 1; k <= n; ++k) m(k, k - 1) = std::sqrt(double(k) * (n - k + 1));
  return m;
}

MatrixXcd jplus_matrix(int n) { return jminus_matrix(n).transpose(); }

std::vector<Rational> j3_diagonal(int n) {
  check_n(n);
  std::vector<Rational> d(n + 1);
  for (int k = 0; k <= n; ++k) d[k] = Rational(n - 2 * k, 2);
  return d;
}

std::vector<SqrtRational> jminus_subdiagonal(int n) {
  check_n(n);
  std::vector<SqrtRational> d(n);
  for (int k = 1; k <= n; ++k) d[k - 1] = SqrtRational::sqrt_of(Rational(k * (n - k + 1)));
  return d;
}

SqrtRational mu_norm(int n, int l, int m) {
  if (l < 0 || l > n || m < 0 || m > l) throw DomainError("mu_norm: need 0 <= m <= l <= n");
  Rational r2(factorial(l) * factorial(l), 2 * l + 1);
  r2 *= Rational(rising_product(n - l, n + l + 1));
  r2 *= Rational(factorial(l - m), factorial(l + m));
  return SqrtRational::sqrt_of(r2);
}

const BasisMatrix& coupled_basis(int n, int l, int m) {
  check_n(n);
  check_lm(n, l, m);
  const auto key = std::make_tuple(n, l, m);
  {
    std::shared_lock lock(g_basis_mutex);
    auto it = g_basis_cache.find(key);
    if (it != g_basis_cache.end()) return it->second;
  }
  BasisMatrix e;
  if (m >= 0) {
    e = build_basis(n, l, m);
  } else {
    e = coupled_basis(n, l, -m).transposed().scaled(
        SqrtRational::of_rational(sign_pow(m)));
  }
  std::unique_lock lock(g_basis_mutex);
  return g_basis_cache.emplace(key, std::move(e)).first->second;
}

BasisMatrix unnormalized_e(int n, int l, int m) {
  check_n(n);
  check_lm(n, l, m);
  if (m >= 0) {
    return coupled_basis(n, l, m).scaled(mu_norm(n, l, m) * Rational(sign_pow(l)));
  }
  // E(l,-|m|) = (-1)^l p_{l,|m|} mu_{l,|m|} e(l,-|m|), p integer
  const int ma = -m;
  BigInt p = 1;
  for (int t = 0; t < ma; ++t) p *= BigInt(l - t) * (l + t + 1);
  return coupled_basis(n, l, m).scaled(mu_norm(n, l, ma) * (Rational(p) * sign_pow(l)));
}

CoupledCoefficients decompose(const MatrixXcd& P) {
  if (P.rows() != P.cols() || P.rows() < 2) throw DimensionMismatch("decompose: square matrix of dim >= 2 required");
  const int n = static_cast<int>(P.rows()) - 1;
  CoupledCoefficients out;
  out.n = n;
  out.a = VectorXcd::Zero((n + 1) * (n + 1));
  for (int l = 0; l <= n; ++l) {
    for (int m = -l; m <= l; ++m) {
      const BasisMatrix& e = coupled_basis(n, l, m);
      std::complex<double> acc = 0.0;
      for (int k = 0; k < e.length(); ++k) {
        auto [r, c] = e.position(k);
        acc += e.diag_d[k] * P(r, c);
      }
      out.a[CoupledCoefficients::index(l, m)] = acc;
    }
  }
  return out;
}

MatrixXcd reconstruct(const CoupledCoefficients& coeffs) {
  const int n = coeffs.n;
  MatrixXcd P = MatrixXcd::Zero(n + 1, n + 1);
  for (int l = 0; l <= n; ++l) {
    for (int m = -l; m <= l; ++m) {
      const auto v = coeffs.at(l, m);
      if (v == std::complex<double>(0.0)) continue;
      const BasisMatrix& e = coupled_basis(n, l, m);
      for (int k = 0; k < e.length(); ++k) {
        auto [r, c] = e.position(k);
        P(r, c) += v * e.diag_d[k];
      }
    }
  }
  return P;
}

std::vector<SqrtRational> product_in_coupled_basis_exact(int n, int l1, int m1, int l2, int m2) {
  check_n(n);
  check_lm(n, l1, m1);
  check_lm(n, l2, m2);
  const int m = m1 + m2;
  std::vector<SqrtRational> out(n + 1);
  for (int l = 0; l <= n; ++l) {
    if (std::abs(m) > l) continue;
    out[l] = wigner::product_symbol(l1, m1, l2, m2, l, -m, n) * Rational(sign_pow(n + m));
  }
  return out;
}

CoupledCoefficients product_in_coupled_basis(int n, int l1, int m1, int l2, int m2) {
  const auto exact = product_in_coupled_basis_exact(n, l1, m1, l2, m2);
  CoupledCoefficients out;
  out.n = n;
  out.a = VectorXcd::Zero((n + 1) * (n + 1));
  const int m = m1 + m2;
  for (int l = std::abs(m); l <= n; ++l) {
    out.a[CoupledCoefficients::index(l, m)] = exact[l].to_double();
  }
  return out;
}

ParityReport verify_parity(int n) {
  check_n(n);
  ParityReport report;
  for (int l1 = 0; l1 <= n && report.pass; ++l1) {
    for (int m1 = -l1; m1 <= l1 && report.pass; ++m1) {
      for (int l2 = 0; l2 <= n && report.pass; ++l2) {
        for (int m2 = -l2; m2 <= l2 && report.pass; ++m2) {
          const auto forward = product_in_coupled_basis_exact(n, l1, m1, l2, m2);
          const auto reverse = product_in_coupled_basis_exact(n, l2, m2, l1, m1);
          ++report.pairs_checked;
          for (int l = 0; l <= n; ++l) {
            const bool same_parity = ((l1 + l2 + l) % 2 == 0);
            const SqrtRational comm = forward[l] - reverse[l];
            const SqrtRational anti = forward[l] + reverse[l];
            const bool bad = (same_parity && !comm.is_zero()) || (!same_parity && !anti.is_zero());
            if (bad) {
              report.pass = false;
              std::ostringstream os;
              os << "n=" << n << " (l1,m1,l2,m2,l)=(" << l1 << "," << m1 << "," << l2 << ","
                 << m2 << "," << l << ")";
              report.first_counterexample = os.str();
              break;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace spinsym::su2
