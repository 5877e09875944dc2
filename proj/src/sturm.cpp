#include "trigfield/sturm.hpp"

#include <algorithm>

namespace trigfield {

namespace {

int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// Positive rescaling keeps signs and tames coefficient growth.
Poly positive_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / content(p));
}

}  // namespace

int sign_at(const Poly& p, const Rational& at) { return sgn(p.eval(at)); }

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw usage_error("Sturm sequence of the zero polynomial");
  Poly base = positive_normalize(squarefree_part(p));
  chain_.push_back(base);
  if (base.degree() <= 0) return;
  chain_.push_back(positive_normalize(base.derivative()));
  while (chain_.back().degree() > 0) {
    Poly r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    chain_.push_back(positive_normalize(-r));
  }
}

int SturmSequence::sign_changes(const Rational& at) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sign_at(q, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::sign_changes_at_infinity(bool positive) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return sign_changes(lo) - sign_changes(hi);
}

int SturmSequence::count_closed(const Rational& lo, const Rational& hi) const {
  if (hi < lo) return 0;
  int at_lo = sign_at(base(), lo) == 0 ? 1 : 0;
  return count(lo, hi) + at_lo;
}

int SturmSequence::count_all() const { return sign_changes_at_infinity(false) - sign_changes_at_infinity(true); }

int sturm_real_root_count(const Poly& p, const RealInterval& window) {
  return SturmSequence(p).count(window.lo, window.hi);
}

std::vector<RealInterval> isolate_real_roots(const Poly& p) {
  SturmSequence sturm(p);
  const Poly& f = sturm.base();
  std::vector<RealInterval> out;
  if (f.degree() <= 0) return out;
  Rational bound = root_bound(f);
  std::vector<RealInterval> stack{{-bound, bound}};
  while (!stack.empty()) {
    RealInterval iv = stack.back();
    stack.pop_back();
    int n = sturm.count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    Rational mid = iv.midpoint();
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  // Convert half-open (lo, hi] cells into closed intervals whose endpoints
  // are not roots, or exact points.
  for (auto& iv : out) {
    if (sign_at(f, iv.hi) == 0) {
      iv.lo = iv.hi;
      continue;
    }
    while (sign_at(f, iv.lo) == 0) {
      Rational mid = iv.midpoint();
      if (sturm.count(iv.lo, mid) == 0) {
        iv.lo = mid;
      } else if (sign_at(f, mid) == 0) {
        iv.lo = iv.hi = mid;
      } else {
        iv.hi = mid;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RealInterval& a, const RealInterval& b) { return a.lo < b.lo; });
  return out;
}

RealInterval refine_real_root(const Poly& squarefree, RealInterval interval, const Rational& width) {
  if (interval.is_point()) return interval;
  int s_lo = sign_at(squarefree, interval.lo);
  while (interval.width() > width) {
    Rational mid = interval.midpoint();
    int s_mid = sign_at(squarefree, mid);
    if (s_mid == 0) return {mid, mid};
    if (s_mid == s_lo) {
      interval.lo = mid;
    } else {
      interval.hi = mid;
    }
  }
  return interval;
}

}  // namespace trigfield
