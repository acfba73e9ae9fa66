#include "spinsym/wigner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace spinsym::wigner {

namespace {

template <size_t N>
struct ArrayHash {
  size_t operator()(const std::array<long, N>& a) const {
    uint64_t h = 1469598103934665603ull;
    for (long v : a) {
      h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

template <size_t N, class V>
class Memo {
 public:
  template <class F>
  V get(const std::array<long, N>& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::array<long, N>, V, ArrayHash<N>> map_;
};

Memo<6, SqrtRational> g_cg_memo;
Memo<6, SqrtRational> g_3jm_memo;
Memo<4, SqrtRational> g_6j_memo;
Memo<7, SqrtRational> g_prod_memo;
Memo<6, double> g_cg_d_memo;
Memo<7, double> g_prod_d_memo;

void check_jm_domain(long dj, long dm, const char* who) {
  if (dj < 0) throw DomainError(std::string(who) + ": negative j");
  if (std::abs(dm) > dj) throw DomainError(std::string(who) + ": |m| > j");
  if ((dj - dm) % 2 != 0) throw DomainError(std::string(who) + ": j-m not integral");
}

// The z-sum shared by the CG and 3jm explicit formulas: terms
// (-1)^(e0+z) / [z! (a1-z)! (q1-z)! (p2-z)! (x1+z)! (x2+z)!].
Rational alternating_z_sum(long e0, long a1, long q1, long p2, long x1, long x2) {
  const long zlo = std::max({0L, -x1, -x2});
  const long zhi = std::min({a1, q1, p2});
  Rational s = 0;
  for (long z = zlo; z <= zhi; ++z) {
    BigInt den = factorial(z) * factorial(a1 - z) * factorial(q1 - z) * factorial(p2 - z) *
                 factorial(x1 + z) * factorial(x2 + z);
    s += Rational(sign_pow(e0 + z), den);
  }
  return s;
}

SqrtRational cg_compute(long dj1, long dm1, long dj2, long dm2, long dj3, long dm3) {
  if (dm1 + dm2 != dm3 || !triangle_ok(dj1, dj2, dj3)) return SqrtRational::zero();
  const long a1 = (dj1 + dj2 - dj3) / 2, a2 = (dj3 + dj1 - dj2) / 2, a3 = (dj2 + dj3 - dj1) / 2;
  const long p1 = (dj1 + dm1) / 2, q1 = (dj1 - dm1) / 2;
  const long p2 = (dj2 + dm2) / 2, q2 = (dj2 - dm2) / 2;
  const long p3 = (dj3 + dm3) / 2, q3 = (dj3 - dm3) / 2;
  const long x1 = (dj3 - dj2 + dm1) / 2, x2 = (dj3 - dj1 - dm2) / 2;
  Rational s = alternating_z_sum(0, a1, q1, p2, x1, x2);
  if (s == 0) return SqrtRational::zero();
  Rational delta2(factorial(a1) * factorial(a2) * factorial(a3),
                  factorial((dj1 + dj2 + dj3) / 2 + 1));
  BigInt s2 = factorial(p1) * factorial(q1) * factorial(p2) * factorial(q2) * factorial(p3) *
              factorial(q3);
  return SqrtRational(s > 0 ? 1 : -1, s * s * Rational(dj3 + 1) * delta2 * Rational(s2));
}

SqrtRational w3jm_compute(long dl1, long dm1, long dl2, long dm2, long dl3, long dm3) {
  if (dm1 + dm2 + dm3 != 0 || !triangle_ok(dl1, dl2, dl3)) return SqrtRational::zero();
  const long a1 = (dl1 + dl2 - dl3) / 2, a2 = (dl3 + dl1 - dl2) / 2, a3 = (dl2 + dl3 - dl1) / 2;
  const long p1 = (dl1 + dm1) / 2, q1 = (dl1 - dm1) / 2;
  const long p2 = (dl2 + dm2) / 2, q2 = (dl2 - dm2) / 2;
  const long p3 = (dl3 + dm3) / 2, q3 = (dl3 - dm3) / 2;
  const long x1 = (dl3 - dl2 + dm1) / 2, x2 = (dl3 - dl1 - dm2) / 2;
  const long e0 = (dl1 - dl2 - dm3) / 2;
  Rational s = alternating_z_sum(e0, a1, q1, p2, x1, x2);
  if (s == 0) return SqrtRational::zero();
  Rational delta2(factorial(a1) * factorial(a2) * factorial(a3),
                  factorial((dl1 + dl2 + dl3) / 2 + 1));
  BigInt s2 = factorial(p1) * factorial(q1) * factorial(p2) * factorial(q2) * factorial(p3) *
              factorial(q3);
  return SqrtRational(s > 0 ? 1 : -1, s * s * delta2 * Rational(s2));
}

SqrtRational w6j_compute(int l1, int l2, int l3, int n) {
  if (!triangle_ok(2L * l1, 2L * l2, 2L * l3)) return SqrtRational::zero();
  const long L = l1 + l2 + l3;
  const long kmin = std::max({(long)l1, (long)l2, (long)l3, L - n});
  const long kmax = std::min({(long)l1 + l2, (long)l2 + l3, (long)l3 + l1});
  Rational s = 0;
  for (long k = kmin; k <= kmax; ++k) {
    BigInt r = factorial(k - l1) * factorial(k - l2) * factorial(k - l3) *
               factorial(l1 + l2 - k) * factorial(l2 + l3 - k) * factorial(l3 + l1 - k);
    s += Rational(sign_pow(n + k) * rising_product(n + k - L, n + 1 + k), r);
  }
  if (s == 0) return SqrtRational::zero();
  Rational delta2(factorial(l1 + l2 - l3) * factorial(l3 + l1 - l2) * factorial(l2 + l3 - l1),
                  factorial(L + 1));
  Rational pref = Rational(factorial(l1) * factorial(l1) * factorial(l2) * factorial(l2) *
                           factorial(l3) * factorial(l3)) *
                  delta2;
  for (int li : {l1, l2, l3}) pref /= Rational(rising_product(n - li, n + li + 1));
  return SqrtRational(s > 0 ? 1 : -1, s * s * pref);
}

}  // namespace

SqrtRational clebsch_gordan(long dj1, long dm1, long dj2, long dm2, long dj3, long dm3) {
  check_jm_domain(dj1, dm1, "clebsch_gordan");
  check_jm_domain(dj2, dm2, "clebsch_gordan");
  check_jm_domain(dj3, dm3, "clebsch_gordan");
  return g_cg_memo.get({dj1, dm1, dj2, dm2, dj3, dm3},
                       [&] { return cg_compute(dj1, dm1, dj2, dm2, dj3, dm3); });
}

SqrtRational wigner_3jm(long dl1, long dm1, long dl2, long dm2, long dl3, long dm3) {
  check_jm_domain(dl1, dm1, "wigner_3jm");
  check_jm_domain(dl2, dm2, "wigner_3jm");
  check_jm_domain(dl3, dm3, "wigner_3jm");
  return g_3jm_memo.get({dl1, dm1, dl2, dm2, dl3, dm3},
                        [&] { return w3jm_compute(dl1, dm1, dl2, dm2, dl3, dm3); });
}

SqrtRational wigner_6j_jjj(int l1, int l2, int l3, int n) {
  if (l1 < 0 || l2 < 0 || l3 < 0 || l1 > n || l2 > n || l3 > n) {
    throw DomainError("wigner_6j_jjj: l out of [0,n]");
  }
  // invariant under permutations of (l1,l2,l3); cache on the sorted triple
  std::array<long, 4> key{l1, l2, l3, n};
  std::sort(key.begin(), key.begin() + 3);
  return g_6j_memo.get(key, [&] {
    return w6j_compute((int)key[0], (int)key[1], (int)key[2], n);
  });
}

SqrtRational product_symbol(int l1, int m1, int l2, int m2, int l3, int m3, int n) {
  if (l1 < 0 || l2 < 0 || l3 < 0 || l1 > n || l2 > n || l3 > n) {
    throw DomainError("product_symbol: l out of [0,n]");
  }
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3) {
    throw DomainError("product_symbol: |m| > l");
  }
  return g_prod_memo.get({l1, m1, l2, m2, l3, m3, n}, [&] {
    SqrtRational v = wigner_3jm(2L * l1, -2L * m1, 2L * l2, -2L * m2, 2L * l3, -2L * m3) *
                     wigner_6j_jjj(l1, l2, l3, n);
    return v * SqrtRational::sqrt_of(Rational((2 * l1 + 1) * (2 * l2 + 1) * (2 * l3 + 1)));
  });
}

SqrtRational cg_000(int l1, int l2, int l3) {
  if (l1 < 0 || l2 < 0 || l3 < 0) throw DomainError("cg_000: negative l");
  const long L = l1 + l2 + l3;
  if (L % 2 != 0 || !triangle_ok(2L * l1, 2L * l2, 2L * l3)) return SqrtRational::zero();
  Rational r(factorial(L / 2), factorial((-l1 + l2 + l3) / 2) * factorial((l1 - l2 + l3) / 2) *
                                   factorial((l1 + l2 - l3) / 2));
  Rational delta2(factorial(l1 + l2 - l3) * factorial(l3 + l1 - l2) * factorial(l2 + l3 - l1),
                  factorial(L + 1));
  return SqrtRational(sign_pow((l1 + l2 - l3) / 2), r * r * Rational(2 * l3 + 1) * delta2);
}

SqrtRational poisson_p(int l1, int l2, int l3) {
  if (l1 < 0 || l2 < 0 || l3 < 0) throw DomainError("poisson_p: negative l");
  const long L = l1 + l2 + l3;
  if (L % 2 == 0) return SqrtRational::zero();
  const long b1 = (-l1 + l2 + l3 - 1) / 2, b2 = (l1 - l2 + l3 - 1) / 2, b3 = (l1 + l2 - l3 - 1) / 2;
  if (b1 < 0 || b2 < 0 || b3 < 0) return SqrtRational::zero();
  Rational r(BigInt(L + 1) * factorial((L - 1) / 2),
             factorial(b1) * factorial(b2) * factorial(b3));
  Rational delta2(factorial(l1 + l2 - l3) * factorial(l3 + l1 - l2) * factorial(l2 + l3 - l1),
                  factorial(L + 1));
  return SqrtRational(sign_pow((l1 + l2 - l3 + 1) / 2), r * r * Rational(2 * l3 + 1) * delta2);
}

double clebsch_gordan_d(long dj1, long dm1, long dj2, long dm2, long dj3, long dm3) {
  return g_cg_d_memo.get({dj1, dm1, dj2, dm2, dj3, dm3}, [&] {
    return clebsch_gordan(dj1, dm1, dj2, dm2, dj3, dm3).to_double();
  });
}

double product_symbol_d(int l1, int m1, int l2, int m2, int l3, int m3, int n) {
  return g_prod_d_memo.get({l1, m1, l2, m2, l3, m3, n}, [&] {
    return product_symbol(l1, m1, l2, m2, l3, m3, n).to_double();
  });
}

double cg_000_d(int l1, int l2, int l3) { return cg_000(l1, l2, l3).to_double(); }

double poisson_p_d(int l1, int l2, int l3) { return poisson_p(l1, l2, l3).to_double(); }

}  // namespace spinsym::wigner
