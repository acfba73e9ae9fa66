#include "spinsym/exact.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdio>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace spinsym {

namespace {
std::shared_mutex g_fact_mutex;
std::deque<BigInt> g_fact_table = {BigInt(1)};  // deque: stable references while growing
}  // namespace

const BigInt& factorial(long k) {
  if (k < 0) throw DomainError("factorial: negative argument");
  {
    std::shared_lock lock(g_fact_mutex);
    if (static_cast<size_t>(k) < g_fact_table.size()) return g_fact_table[k];
  }
  std::unique_lock lock(g_fact_mutex);
  while (g_fact_table.size() <= static_cast<size_t>(k)) {
    g_fact_table.push_back(g_fact_table.back() * BigInt(g_fact_table.size()));
  }
  return g_fact_table[k];
}

BigInt rising_product(long a, long b) {
  BigInt p = 1;
  for (long t = a + 1; t <= b; ++t) p *= t;
  return p;
}

SqrtRational::SqrtRational(int sign, Rational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw DomainError("SqrtRational: negative radicand");
  if (radicand_ == 0) sign_ = 0;
  if (sign_ == 0 && radicand_ != 0) throw DomainError("SqrtRational: zero sign, nonzero radicand");
}

SqrtRational SqrtRational::of_rational(const Rational& q) {
  if (q == 0) return SqrtRational();
  return SqrtRational(q > 0 ? 1 : -1, q * q);
}

SqrtRational SqrtRational::sqrt_of(const Rational& q) {
  if (q < 0) throw DomainError("SqrtRational::sqrt_of: negative argument");
  if (q == 0) return SqrtRational();
  return SqrtRational(1, q);
}

SqrtRational SqrtRational::operator-() const {
  SqrtRational r(*this);
  r.sign_ = -r.sign_;
  return r;
}

SqrtRational SqrtRational::inverse() const {
  if (is_zero()) throw DomainError("SqrtRational::inverse: zero");
  return SqrtRational(sign_, 1 / radicand_);
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
  if (a.is_zero() || b.is_zero()) return SqrtRational();
  return SqrtRational(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

SqrtRational operator*(const SqrtRational& a, const Rational& q) {
  if (a.is_zero() || q == 0) return SqrtRational();
  return SqrtRational(q > 0 ? a.sign_ : -a.sign_, a.radicand_ * q * q);
}

SqrtRational operator+(const SqrtRational& a, const SqrtRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Rational ratio = b.radicand_ / a.radicand_;
  const BigInt num = numerator(ratio), den = denominator(ratio);
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) {
    throw IncompatibleRadicands("SqrtRational: sum outside a common radical lattice");
  }
  // b = sign_b * q * sqrt(ra) with q = sqrt(rb/ra) rational
  Rational coeff = Rational(a.sign_) + Rational(b.sign_) * Rational(sn, sd);
  if (coeff == 0) return SqrtRational();
  return SqrtRational(coeff > 0 ? 1 : -1, coeff * coeff * a.radicand_);
}

double SqrtRational::to_double() const {
  if (sign_ == 0) return 0.0;
  using F = boost::multiprecision::cpp_bin_float_50;
  F x(numerator(radicand_));
  x /= F(denominator(radicand_));
  x = sqrt(x);
  const double v = sign_ * x.convert_to<double>();
  if (!std::isfinite(v)) throw DomainError("SqrtRational::to_double: overflow");
  return v;
}

std::string SqrtRational::str() const {
  std::string s = (sign_ < 0) ? "-1" : (sign_ > 0 ? "1" : "0");
  return s + "*sqrt(" + numerator(radicand_).str() + "/" + denominator(radicand_).str() + ")";
}

std::string SqrtRational::decimal_str() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", to_double());
  return buf;
}

bool triangle_ok(long d1, long d2, long d3) {
  if (d1 < 0 || d2 < 0 || d3 < 0) throw DomainError("triangle_ok: negative argument");
  if ((d1 + d2 + d3) % 2 != 0) return false;
  return std::abs(d1 - d2) <= d3 && d3 <= d1 + d2;
}

SqrtRational delta_weight(long d1, long d2, long d3) {
  if (!triangle_ok(d1, d2, d3)) throw TriangleViolation("delta_weight: triangle condition fails");
  const long a1 = (d1 + d2 - d3) / 2;
  const long a2 = (d3 + d1 - d2) / 2;
  const long a3 = (d2 + d3 - d1) / 2;
  Rational r(factorial(a1) * factorial(a2) * factorial(a3), factorial((d1 + d2 + d3) / 2 + 1));
  return SqrtRational::sqrt_of(r);
}

}  // namespace spinsym
