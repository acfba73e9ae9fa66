#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace spinsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Genuine argument violations raise; selection-rule failures return exact zero.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TriangleViolation : DomainError {
  using DomainError::DomainError;
};
struct DimensionMismatch : DomainError {
  using DomainError::DomainError;
};
struct DegreeTooHigh : DomainError {
  using DomainError::DomainError;
};
struct GridTooCoarse : DomainError {
  using DomainError::DomainError;
};
// Raised by the restricted sum of SqrtRational values when the two radicands
// do not differ by the square of a rational.  Hitting it means a caller
// summed values outside a common square-root lattice.
struct IncompatibleRadicands : std::logic_error {
  using std::logic_error::logic_error;
};

inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

// k!, memoized; safe for concurrent use (grow-only table).
const BigInt& factorial(long k);

// (a+1)(a+2)...b for b >= a >= 0, i.e. b!/a!; empty product is 1.
BigInt rising_product(long a, long b);

// Exact scalar sign*sqrt(p/q).  Closed under multiplication; addition is
// restricted to values in a common sqrt(rational) lattice.
class SqrtRational {
 public:
  SqrtRational() : sign_(0), radicand_(0) {}
  SqrtRational(int sign, Rational radicand);

  static SqrtRational zero() { return SqrtRational(); }
  static SqrtRational one() { return SqrtRational(1, 1); }
  // Exact representation of a rational value q (= sgn(q)*sqrt(q^2)).
  static SqrtRational of_rational(const Rational& q);
  // sqrt(q) for q >= 0.
  static SqrtRational sqrt_of(const Rational& q);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  SqrtRational operator-() const;
  SqrtRational inverse() const;  // throws DomainError on zero

  friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);
  friend SqrtRational operator*(const SqrtRational& a, const Rational& q);
  friend SqrtRational operator*(const Rational& q, const SqrtRational& a) { return a * q; }
  // Lattice-restricted sum; throws IncompatibleRadicands otherwise.
  friend SqrtRational operator+(const SqrtRational& a, const SqrtRational& b);
  friend SqrtRational operator-(const SqrtRational& a, const SqrtRational& b) { return a + (-b); }

  bool operator==(const SqrtRational& o) const {
    return sign_ == o.sign_ && radicand_ == o.radicand_;
  }
  bool operator!=(const SqrtRational& o) const { return !(*this == o); }

  // Nearest double to sign*sqrt(p/q), computed at 50 decimal digits first.
  double to_double() const;
  // "s*sqrt(p/q)" with s in {-1,0,1} and p/q reduced.
  std::string str() const;
  // Decimal rendering at 17 significant digits.
  std::string decimal_str() const;

 private:
  int sign_;
  Rational radicand_;
};

// Triangle condition delta(l1,l2,l3)=1 on doubled half-integers:
// |l1-l2| <= l3 <= l1+l2 and l1+l2+l3 integral (doubled sum even).
bool triangle_ok(long d1, long d2, long d3);

// Delta(l1,l2,l3) on doubled half-integers; throws TriangleViolation.
SqrtRational delta_weight(long d1, long d2, long d3);

}  // namespace spinsym
