#pragma once

#include "spinsym/correspondence.hpp"
#include "spinsym/sphere.hpp"

#include <vector>

namespace spinsym::trikernel {

using corr::CharacteristicNumbers;
using sphere::Complex;
using sphere::HarmonicVector;
using sphere::QuadratureGrid;
using sphere::SpherePoint;

// Integral trikernel L_c(n1,n2,n3) in coefficient form: the triple sum of
// Wigner product symbols against conjugated spherical harmonics, weighted by
// c_{l3}/(c_{l1} c_{l2}).
Complex trikernel_coeff(const CharacteristicNumbers& chars, const SpherePoint& p1,
                        const SpherePoint& p2, const SpherePoint& p3);

// SO(3)-invariant building block L_{l1,l2,l3}(n1,n2,n3); real for even
// l1+l2+l3, purely imaginary for odd.  Throws TriangleViolation.
Complex invariant_L(int l1, int l2, int l3, const SpherePoint& p1, const SpherePoint& p2,
                    const SpherePoint& p3);

// The same trikernel through the SO(3)-invariant expansion over 6j symbols.
Complex trikernel_invariant(const CharacteristicNumbers& chars, const SpherePoint& p1,
                            const SpherePoint& p2, const SpherePoint& p3);

// Closed form of the recursive trikernel of the standard Berezin family:
// ((n+1)/(2^n 4pi))^2 (1 + X + i det)^n.
Complex wildberger_closed(int n, const SpherePoint& p1, const SpherePoint& p2,
                          const SpherePoint& p3);

// Recursive trikernel of a general family: coefficient form with the ratio
// replaced by c_{l1} c_{l2} c_{l3}.
Complex recursive_trikernel(const CharacteristicNumbers& chars, const SpherePoint& p1,
                            const SpherePoint& p2, const SpherePoint& p3);

// Berezin transform in coefficient space: f_{l,m} -> (b_l^n)^2 f_{l,m}; the
// inverse divides.  Degree cap of f fixes n.
HarmonicVector berezin_transform(const HarmonicVector& f);
HarmonicVector berezin_transform_inverse(const HarmonicVector& f);
// Integral route for the forward transform, kernel ((n+1)/4pi)((1+t)/2)^n.
HarmonicVector berezin_transform_integral(const HarmonicVector& f, const QuadratureGrid& grid);

// Berezin-Stratonovich transform f_{l,m} -> f_{l,m}/b_l^n and its inverse
// (the Stratonovich-Berezin transform, multiplication by b_l^n).
HarmonicVector bs_transform(const HarmonicVector& f);
HarmonicVector sb_transform(const HarmonicVector& f);

// Sup over the sample points of |double quadrature of f g L - coefficient
// twisted product|.  Throws GridTooCoarse when the grid cannot integrate the
// integrand exactly.
double integral_product_check(const HarmonicVector& f, const HarmonicVector& g,
                              const CharacteristicNumbers& chars, const QuadratureGrid& grid,
                              const std::vector<SpherePoint>& samples);

}  // namespace spinsym::trikernel
