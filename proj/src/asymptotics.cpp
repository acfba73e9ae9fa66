#include "spinsym/asymptotics.hpp"

#include "spinsym/sphere.hpp"
#include "spinsym/twisted.hpp"
#include "spinsym/wigner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace spinsym::asym {

using sphere::Complex;
using sphere::HarmonicVector;
using sphere::SpherePoint;

SqrtRational asymptotic_coeff(int l1, int m1, int l2, int m2, int l3, int order) {
  if (order != 0 && order != 1) throw DomainError("asymptotic_coeff: order must be 0 or 1");
  const int m = m1 + m2;
  if (std::abs(m) > l3) return SqrtRational::zero();
  const SqrtRational cg =
      wigner::clebsch_gordan(2L * l1, 2L * m1, 2L * l2, 2L * m2, 2L * l3, 2L * m);
  return order == 0 ? cg * wigner::cg_000(l1, l2, l3) : cg * wigner::poisson_p(l1, l2, l3);
}

double normalized_product_symbol(int l1, int m1, int l2, int m2, int l3, int n) {
  const int m = m1 + m2;
  if (std::abs(m) > l3) throw DomainError("normalized_product_symbol: |m1+m2| > l3");
  const double w = wigner::product_symbol(l1, m1, l2, m2, l3, -m, n).to_double();
  const double scale =
      std::sqrt(double(n + 1) * (2 * l3 + 1) / (double(2 * l1 + 1) * (2 * l2 + 1)));
  return sign_pow(n + m) * scale * w;
}

double expansion_residual(int l1, int m1, int l2, int m2, int l3, int n) {
  if (l1 > n || l2 > n || l3 > n) throw DomainError("expansion_residual: l > n");
  const double order0 = asymptotic_coeff(l1, m1, l2, m2, l3, 0).to_double();
  const double order1 = asymptotic_coeff(l1, m1, l2, m2, l3, 1).to_double();
  return std::abs(normalized_product_symbol(l1, m1, l2, m2, l3, n) - order0 - order1 / n);
}

namespace {

void check_sigma_args(int l1, int l2, int l3) {
  if (l1 < 0 || l2 < 0 || l3 < 0 || !triangle_ok(2L * l1, 2L * l2, 2L * l3)) {
    throw TriangleViolation("sigma: delta(l1,l2,l3) = 0");
  }
}

}  // namespace

std::pair<Rational, Rational> sigma_brute_pair(int l1, int l2, int l3) {
  check_sigma_args(l1, l2, l3);
  const long kmin = std::max({l1, l2, l3});
  const long kmax = std::min({l1 + l2, l2 + l3, l3 + l1});
  // term t_k = (-1)^k / R(k); carried as integers N_k / D_k with
  // N_{k+1} = N_k * prod(l_i + l_j - k), D_{k+1} = D_k * prod(k+1 - l_i),
  // so partial sums share one growing denominator and need no gcd work.
  BigInt N = 1;
  BigInt D = factorial(kmin - l1) * factorial(kmin - l2) * factorial(kmin - l3) *
             factorial(l1 + l2 - kmin) * factorial(l2 + l3 - kmin) * factorial(l3 + l1 - kmin);
  BigInt s0 = sign_pow(kmin);
  BigInt s1 = sign_pow(kmin) * kmin;
  for (long k = kmin; k < kmax; ++k) {
    const BigInt p = BigInt(l1 + l2 - k) * (l2 + l3 - k) * (l3 + l1 - k);
    const BigInt q = BigInt(k + 1 - l1) * (k + 1 - l2) * (k + 1 - l3);
    N *= p;
    D *= q;
    s0 = s0 * q + sign_pow(k + 1) * N;
    s1 = s1 * q + sign_pow(k + 1) * (k + 1) * N;
  }
  return {Rational(s0, D), Rational(s1, D)};
}

Rational sigma0_brute(int l1, int l2, int l3) { return sigma_brute_pair(l1, l2, l3).first; }
Rational sigma1_brute(int l1, int l2, int l3) { return sigma_brute_pair(l1, l2, l3).second; }

namespace {

Rational q_factor(int l1, int l2, int l3) {
  const int h = (l1 + l2 + l3) / 2;  // [L/2]
  return Rational(factorial(h), factorial(l1) * factorial(h - l1) * factorial(l2) *
                                    factorial(h - l2) * factorial(l3) * factorial(h - l3));
}

}  // namespace

Rational sigma0_closed(int l1, int l2, int l3) {
  check_sigma_args(l1, l2, l3);
  const int L = l1 + l2 + l3;
  if (L % 2 != 0) return Rational(0);
  return Rational(sign_pow(L / 2)) * q_factor(l1, l2, l3);
}

Rational sigma1_closed(int l1, int l2, int l3) {
  check_sigma_args(l1, l2, l3);
  const int L = l1 + l2 + l3;
  if (L % 2 == 0) return Rational(sign_pow(L / 2)) * Rational(L, 2) * q_factor(l1, l2, l3);
  return Rational(sign_pow((L + 1) / 2)) * q_factor(l1, l2, l3);
}

double fit_loglog_slope(const std::vector<int>& ns, const std::vector<double>& errs) {
  if (ns.size() != errs.size() || ns.size() < 2) throw DomainError("fit_loglog_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = double(ns.size());
  for (size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(double(ns[i]));
    const double y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

LimitEstimate estimate_limit(const std::vector<int>& ns, const std::vector<double>& ys) {
  LimitEstimate est;
  if (ns.size() < 3) throw DomainError("estimate_limit: need >= 3 points");
  for (double y : ys) {
    if (!std::isfinite(y)) return est;
  }
  auto neville = [](const std::vector<double>& xs, std::vector<double> p) {
    const size_t count = xs.size();
    for (size_t k = 1; k < count; ++k) {
      for (size_t i = 0; i + k < count; ++i) {
        p[i] = ((0.0 - xs[i + k]) * p[i] + xs[i] * p[i + 1]) / (xs[i] - xs[i + k]);
      }
    }
    return p[0];
  };
  std::vector<double> xs(ns.size());
  for (size_t i = 0; i < ns.size(); ++i) xs[i] = 1.0 / ns[i];
  const double full = neville(xs, ys);
  const double drop = neville(std::vector<double>(xs.begin() + 1, xs.end()),
                              std::vector<double>(ys.begin() + 1, ys.end()));
  est.value = full;
  est.uncertainty = std::abs(full - drop);
  est.exists = std::isfinite(full) && est.uncertainty <= 1e-3 * std::max(1.0, std::abs(full));
  return est;
}

SequenceReport classify_sequence(const Generator& gen, int l_max, std::vector<int> n_grid) {
  if (l_max < 1) throw DomainError("classify_sequence: l_max must be >= 1");
  if (n_grid.size() < 4) throw DomainError("classify_sequence: n_grid too short");
  std::sort(n_grid.begin(), n_grid.end());
  SequenceReport report;
  report.l_max = l_max;
  report.n_grid = n_grid;

  report.l_limits.assign(l_max + 1, {});
  for (int l = 1; l <= l_max; ++l) {
    std::vector<int> ns;
    std::vector<double> ys;
    for (int n : n_grid) {
      if (n < l) continue;
      ns.push_back(n);
      ys.push_back(gen(n, l));
    }
    report.l_limits[l] = estimate_limit(ns, ys);
  }

  report.limiting = true;
  bool pos_match = true, neg_match = true;
  report.pseudo_classical = true;
  report.quasi_classical = true;
  for (int l = 1; l <= l_max; ++l) {
    const auto& e = report.l_limits[l];
    if (!e.exists) {
      report.limiting = report.pseudo_classical = report.quasi_classical = false;
      pos_match = neg_match = false;
      break;
    }
    if (std::abs(e.value - 1.0) > report.limit_tol) pos_match = false;
    if (std::abs(e.value - sign_pow(l)) > report.limit_tol) neg_match = false;
    if (std::abs(e.value) < 1e-6 || std::abs(e.value) > 1e6) report.pseudo_classical = false;
    if (std::abs(std::abs(e.value) - 1.0) > report.limit_tol) report.quasi_classical = false;
  }
  report.poisson = report.limiting && pos_match;
  report.anti_poisson = report.limiting && neg_match;

  // pure: n (c_l^n - f(l)) -> 0 with f matching the detected orientation
  if (report.poisson || report.anti_poisson) {
    report.pure_limits.assign(l_max + 1, {});
    bool pure = true;
    for (int l = 1; l <= l_max; ++l) {
      const double target = report.poisson ? 1.0 : sign_pow(l);
      std::vector<int> ns;
      std::vector<double> ys;
      for (int n : n_grid) {
        if (n < l) continue;
        ns.push_back(n);
        ys.push_back(n * (gen(n, l) - target));
      }
      report.pure_limits[l] = estimate_limit(ns, ys);
      if (!report.pure_limits[l].exists ||
          std::abs(report.pure_limits[l].value) > report.pure_tol) {
        pure = false;
      }
    }
    report.pure = pure;
  }

  // strong-limiting probe along the diagonals l = n and l = n/2
  {
    std::vector<double> full, half;
    for (int n : n_grid) {
      full.push_back(std::abs(gen(n, n)));
      half.push_back(std::abs(gen(n, std::max(1, n / 2))));
    }
    report.diag_full = estimate_limit(n_grid, full);
    report.diag_half = estimate_limit(n_grid, half);
    const auto& tail = report.l_limits[l_max];
    report.strong_limiting =
        report.limiting && report.diag_full.exists && report.diag_half.exists &&
        std::abs(report.diag_full.value - report.diag_half.value) < report.diagonal_tol &&
        tail.exists &&
        std::abs(report.diag_full.value - std::abs(tail.value)) < report.diagonal_tol;
  }

  report.bohr = (report.poisson || report.anti_poisson) && report.strong_limiting;
  report.none = !(report.poisson || report.anti_poisson || report.limiting);
  return report;
}

namespace {

std::vector<SpherePoint> sample_points(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<SpherePoint> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double z = unit(rng);
    pts.push_back(sphere::SpherePoint::from_angles(angle(rng), std::acos(z)));
  }
  return pts;
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const Generator& gen, int l1, int m1, int l2,
                                              int m2, const std::vector<int>& n_grid,
                                              int samples, unsigned seed, int jobs) {
  if (std::abs(m1) > l1 || std::abs(m2) > l2) throw DomainError("convergence_study: |m| > l");
  for (int n : n_grid) {
    if (n < std::max(l1, l2)) throw DomainError("convergence_study: grid point below max(l1,l2)");
  }
  const auto pts = sample_points(samples, seed);
  const int cap = l1 + l2;

  const HarmonicVector f0 = HarmonicVector::basis(cap, l1, m1);
  const HarmonicVector g0 = HarmonicVector::basis(cap, l2, m2);
  const HarmonicVector prod = sphere::pointwise_product(f0, g0, cap);
  const HarmonicVector ibracket = sphere::poisson_bracket(f0, g0, cap) * Complex(0.0, 1.0);

  std::vector<Complex> prod_vals(pts.size()), ibr_vals(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    prod_vals[i] = prod.eval(pts[i]);
    ibr_vals[i] = ibracket.eval(pts[i]);
  }

  std::vector<ConvergenceRow> rows(n_grid.size());
  auto work = [&](size_t idx) {
    const int n = n_grid[idx];
    const auto chars = corr::custom_chars(n, gen);
    const auto f = HarmonicVector::basis(n, l1, m1);
    const auto g = HarmonicVector::basis(n, l2, m2);
    const auto fg = twisted::twisted_product(f, g, chars);
    const auto gf = twisted::twisted_product(g, f, chars);
    const HarmonicVector sym = (fg + gf) * Complex(0.5);
    const HarmonicVector comm = (fg - gf) * Complex(0.5 * n);
    double sym_err = 0.0, comm_err = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
      sym_err = std::max(sym_err, std::abs(sym.eval(pts[i]) - prod_vals[i]));
      comm_err = std::max(comm_err, std::abs(comm.eval(pts[i]) - ibr_vals[i]));
    }
    rows[idx] = {n, sym_err, comm_err};
  };

  if (jobs <= 1) {
    for (size_t i = 0; i < n_grid.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    const int workers = std::min<int>(jobs, (int)n_grid.size());
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < n_grid.size(); i = next.fetch_add(1)) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  return rows;
}

Generator gen_power_decay() {
  return [](int n, int l) { return std::pow(double(n), -double(l)); };
}

Generator gen_log_drift() {
  return [](int n, int l) { return 1.0 - std::log(1.0 - double(l - 1) / n); };
}

Generator gen_mod3_signs() {
  return [](int n, int l) {
    const double h = (l % 3 == 1) ? -1.0 : 1.0;
    return h * (1.0 + 1.0 / n);
  };
}

}  // namespace spinsym::asym
