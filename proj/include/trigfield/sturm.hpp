#pragma once

#include <vector>

#include "trigfield/poly.hpp"

namespace trigfield {

/// Closed rational interval, lo <= hi.
struct RealInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Sturm chain of the squarefree part of a polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& p);

  int sign_changes(const Rational& at) const;
  int sign_changes_at_infinity(bool positive) const;
  /// Distinct real roots in the half-open window (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots in [lo, hi].
  int count_closed(const Rational& lo, const Rational& hi) const;
  int count_all() const;

  const Poly& base() const { return chain_.front(); }

 private:
  std::vector<Poly> chain_;
};

int sign_at(const Poly& p, const Rational& at);

/// Number of distinct real roots of p in (window.lo, window.hi].
int sturm_real_root_count(const Poly& p, const RealInterval& window);

/// Isolating intervals for the distinct real roots of p, ascending. Each
/// interval holds exactly one root; endpoints are not roots unless the
/// interval is a single (rational) point.
std::vector<RealInterval> isolate_real_roots(const Poly& p);

/// Shrinks an isolating interval of a squarefree polynomial below `width`.
RealInterval refine_real_root(const Poly& squarefree, RealInterval interval, const Rational& width);

}  // namespace trigfield
