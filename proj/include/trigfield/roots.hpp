#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigfield/complex.hpp"
#include "trigfield/poly.hpp"
#include "trigfield/sturm.hpp"

namespace trigfield {

/// Axis-aligned rational box; a real root has the degenerate [0,0]
/// imaginary extent.
struct ComplexBox {
  RealInterval re;
  RealInterval im;

  bool is_real() const { return im.lo == 0 && im.hi == 0; }
  Rational re_mid() const { return re.midpoint(); }
  Rational im_mid() const { return im.midpoint(); }
  Complex center() const { return {Real(re_mid()), Real(im_mid())}; }
  ComplexBox conjugate() const { return {re, {-im.hi, -im.lo}}; }
  bool contains(const Complex& z) const;
  /// Max of the two side lengths.
  Rational size() const;
};

std::string to_string(const ComplexBox& box);

/// Exact number of roots (with multiplicity) of p inside the open rectangle,
/// from the winding number of p along its boundary. Empty when a root lies
/// on the boundary. The rectangle must have positive width and height.
std::optional<int> count_roots_in_box(const Poly& p, const ComplexBox& box);

/// All complex roots (with multiplicity) approximated simultaneously by the
/// Aberth iteration at the current working precision.
std::vector<Complex> aberth_roots(const Poly& p, int max_iterations = 1000);

/// Disjoint isolating boxes, one per distinct root, ordered by box centre
/// (real part, then imaginary part). Real roots come from Sturm bisection;
/// nonreal boxes are certified by a winding number of exactly 1.
std::vector<ComplexBox> isolate_roots(const Poly& p);

/// Box around the approximation z of a nonreal root of f, with half-width a
/// quarter of the distance to the real axis and to `others`. Empty unless
/// the winding number certifies exactly one root inside.
std::optional<ComplexBox> certify_nonreal_box(const Poly& f, const Complex& z, const std::vector<Complex>& others);

/// Box around approximation i of a nonreal root from the Weierstrass
/// inclusion disks |z - z_i| <= n |p(z_i) / prod (z_i - z_j)| of all the
/// approximations of the monic f. Empty unless disk i is well separated from
/// the others and from the real axis.
std::optional<ComplexBox> inclusion_box(const Poly& f, const std::vector<Complex>& approx, std::size_t i);

/// Rational approximation of a Real with about `bits` significant bits.
Rational round_to_rational(const Real& x, int bits);

}  // namespace trigfield
