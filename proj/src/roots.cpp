#include "trigfield/roots.hpp"

#include <algorithm>
#include <cmath>

namespace trigfield {

namespace {

// p(z0 + t*d) split into real and imaginary polynomials in t.
struct EdgePoly {
  Poly re;
  Poly im;
};

EdgePoly restrict_to_edge(const Poly& p, const Rational& z0re, const Rational& z0im, const Rational& dre,
                          const Rational& dim) {
  Poly lin_re{z0re, dre};
  Poly lin_im{z0im, dim};
  Poly acc_re, acc_im;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Poly nr = acc_re * lin_re - acc_im * lin_im;
    Poly ni = acc_re * lin_im + acc_im * lin_re;
    acc_re = nr + Poly::constant(*it);
    acc_im = ni;
  }
  return {acc_re, acc_im};
}

int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// Octant code of a nonzero value: 0 on the positive real axis, then counter
// clockwise in steps of 45 degrees.
int octant(int sr, int si) {
  if (si == 0) return sr > 0 ? 0 : 4;
  if (sr == 0) return si > 0 ? 2 : 6;
  if (sr > 0) return si > 0 ? 1 : 7;
  return si > 0 ? 3 : 5;
}

class EdgeTracker {
 public:
  explicit EdgeTracker(const EdgePoly& e) : e_(e) {
    if (!e_.re.is_zero() && e_.re.degree() > 0) sturm_re_.emplace(e_.re);
    if (!e_.im.is_zero() && e_.im.degree() > 0) sturm_im_.emplace(e_.im);
  }

  // A zero of p on the closed edge.
  bool boundary_zero() const {
    if (e_.re.is_zero() && e_.im.is_zero()) return true;
    Poly g = e_.re.is_zero() ? e_.im : (e_.im.is_zero() ? e_.re : gcd(e_.re, e_.im));
    if (g.degree() <= 0) return false;
    return SturmSequence(g).count_closed(Rational(0), Rational(1)) > 0;
  }

  int code(const Rational& t) const { return octant(sign_of(e_.re.eval(t)), sign_of(e_.im.eval(t))); }

  // Change of octant code over [0, 1], exact.
  int turn() const { return turn(Rational(0), Rational(1), 0); }

 private:
  bool has_root(const Poly& q, const std::optional<SturmSequence>& s, const Rational& a, const Rational& b) const {
    if (q.is_zero()) return true;
    if (!s) return false;
    return s->count_closed(a, b) > 0;
  }

  int turn(const Rational& a, const Rational& b, int depth) const {
    if (depth > 400) throw computation_error("winding number subdivision did not terminate");
    if (!has_root(e_.re, sturm_re_, a, b) || !has_root(e_.im, sturm_im_, a, b)) {
      int delta = code(b) - code(a);
      while (delta > 4) delta -= 8;
      while (delta <= -4) delta += 8;
      return delta;
    }
    Rational m = (a + b) / 2;
    return turn(a, m, depth + 1) + turn(m, b, depth + 1);
  }

  EdgePoly e_;
  std::optional<SturmSequence> sturm_re_;
  std::optional<SturmSequence> sturm_im_;
};

Complex eval_complex(const std::vector<Real>& coeffs, const Complex& z) {
  Complex acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

// Rational within |rho|/64 of x, with few bits.
Rational round_near(const Real& x, const Real& rho) {
  if (x.is_zero()) return Rational(0);
  long bits = std::max<long>(8, x.exponent() - rho.exponent() + 8);
  return round_to_rational(x, static_cast<int>(bits));
}

bool box_less(const ComplexBox& a, const ComplexBox& b) {
  Rational ar = a.re_mid(), br = b.re_mid();
  if (ar != br) return ar < br;
  return a.im_mid() < b.im_mid();
}

}  // namespace

bool ComplexBox::contains(const Complex& z) const {
  return Real(re.lo) <= z.re && z.re <= Real(re.hi) && Real(im.lo) <= z.im && z.im <= Real(im.hi);
}

Rational ComplexBox::size() const {
  Rational w = re.width(), h = im.width();
  return w > h ? w : h;
}

std::string to_string(const ComplexBox& box) {
  return "[" + to_string(box.re.lo) + "," + to_string(box.re.hi) + "]x[" + to_string(box.im.lo) + "," +
         to_string(box.im.hi) + "]";
}

Rational round_to_rational(const Real& x, int bits) {
  PrecisionScope scope(std::max(bits, 2));
  Real y = x + Real(0);
  return y.to_rational();
}

std::optional<int> count_roots_in_box(const Poly& p, const ComplexBox& box) {
  if (box.re.width() <= 0 || box.im.width() <= 0) throw usage_error("count_roots_in_box needs a proper rectangle");
  if (p.is_zero()) throw usage_error("count_roots_in_box of the zero polynomial");
  if (p.degree() == 0) return 0;
  const Rational& x0 = box.re.lo;
  const Rational& x1 = box.re.hi;
  const Rational& y0 = box.im.lo;
  const Rational& y1 = box.im.hi;
  const Rational zero(0);
  EdgePoly edges[4] = {
      restrict_to_edge(p, x0, y0, x1 - x0, zero),
      restrict_to_edge(p, x1, y0, zero, y1 - y0),
      restrict_to_edge(p, x1, y1, x0 - x1, zero),
      restrict_to_edge(p, x0, y1, zero, y0 - y1),
  };
  int total = 0;
  for (const auto& e : edges) {
    EdgeTracker tracker(e);
    if (tracker.boundary_zero()) return std::nullopt;
    total += tracker.turn();
  }
  if (total % 8 != 0) throw computation_error("winding number is not an integer");
  return total / 8;
}

std::vector<Complex> aberth_roots(const Poly& p, int max_iterations) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<Real> c;
  for (const auto& q : p.coefficients()) c.emplace_back(q);
  std::vector<Real> dc;
  for (int i = 1; i <= n; ++i) dc.push_back(c[static_cast<std::size_t>(i)] * Real(i));
  if (n == 1) return {Complex(-c[0] / c[1])};

  // Starting points on a circle sized by the geometric mean of the roots.
  double ratio0 = abs(c[0] / c[static_cast<std::size_t>(n)]).to_double();
  double r = std::pow(ratio0, 1.0 / n);
  if (!(r > 1e-6) || !std::isfinite(r)) r = 1.0;
  std::vector<Complex> z;
  Real two_pi = Real::pi() * Real(2);
  for (int k = 0; k < n; ++k) {
    Real angle = two_pi * Real(k) / Real(n) + Real(0.4);
    z.push_back(polar(Real(r), angle));
  }

  const Real tol = ldexp(Real(1), -(working_precision() - 8));
  // Horner rounding error bound scale for |p(z)|.
  const Real eps = ldexp(Real(1), -(working_precision() - 4)) * Real(4 * n);
  std::vector<Real> abs_c;
  for (const auto& v : c) abs_c.push_back(abs(v));
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  int remaining = n;
  for (int iter = 0; iter < max_iterations && remaining > 0; ++iter) {
    for (int k = 0; k < n; ++k) {
      if (done[static_cast<std::size_t>(k)]) continue;
      auto& zk = z[static_cast<std::size_t>(k)];
      Complex pv = eval_complex(c, zk);
      Real az = abs(zk);
      Real bound;
      for (int i = n; i >= 0; --i) bound = bound * az + abs_c[static_cast<std::size_t>(i)];
      if (abs(pv) <= bound * eps) {
        done[static_cast<std::size_t>(k)] = 1;
        --remaining;
        continue;
      }
      Complex dv = eval_complex(dc, zk);
      Complex ratio = pv / dv;
      Complex sum;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = zk - z[static_cast<std::size_t>(j)];
        sum += Complex(Real(1)) / diff;
      }
      Complex step = ratio / (Complex(Real(1)) - ratio * sum);
      zk -= step;
      if (abs(step) <= tol * max(Real(1), abs(zk))) {
        done[static_cast<std::size_t>(k)] = 1;
        --remaining;
      }
    }
  }
  if (remaining == 0) return z;
  throw computation_error("Aberth iteration did not converge");
}

std::optional<ComplexBox> certify_nonreal_box(const Poly& f, const Complex& z, const std::vector<Complex>& others) {
  Real rho = abs(z.im);
  for (const auto& w : others) rho = min(rho, abs(z - w));
  rho = rho / Real(4);
  if (rho.is_zero()) return std::nullopt;
  // Dyadic rounding keeps the certification arithmetic small.
  Rational cr = round_near(z.re, rho);
  Rational ci = round_near(z.im, rho);
  Rational r = round_to_rational(rho, 8);
  ComplexBox box{{cr - r, cr + r}, {ci - r, ci + r}};
  auto count = count_roots_in_box(f, box);
  if (!count || *count != 1) return std::nullopt;
  return box;
}

std::optional<ComplexBox> inclusion_box(const Poly& f, const std::vector<Complex>& approx, std::size_t i) {
  const std::size_t n = approx.size();
  if (static_cast<int>(n) != f.degree() || i >= n) return std::nullopt;
  std::vector<Real> c;
  for (const auto& q : f.coefficients()) c.emplace_back(q);
  const Real slack = ldexp(Real(1), -(working_precision() - 16));
  auto radius = [&](std::size_t k) {
    const Complex& z = approx[k];
    Complex den(Real(1));
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) den *= z - approx[j];
    }
    Real w = abs(eval_complex(c, z) / den) / abs(c.back());
    return (w * Real(static_cast<long>(n)) + slack * max(Real(1), abs(z))) * Real(2);
  };
  std::vector<Real> r;
  for (std::size_t k = 0; k < n; ++k) r.push_back(radius(k));
  const Complex& z = approx[i];
  if (!(abs(z.im) > r[i] * Real(3))) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i && !(abs(z - approx[j]) > r[i] * Real(3) + r[j])) return std::nullopt;
  }
  // Half-width in [1.5 r, 2 r]: contains disk i, misses every other disk.
  Rational h = round_to_rational(r[i] * Real(1.75), 8);
  Rational cr = round_near(z.re, r[i] / Real(8));
  Rational ci = round_near(z.im, r[i] / Real(8));
  return ComplexBox{{cr - h, cr + h}, {ci - h, ci + h}};
}

std::vector<ComplexBox> isolate_roots(const Poly& p) {
  if (p.is_zero()) throw usage_error("isolate_roots of the zero polynomial");
  Poly f = primitive_part(squarefree_part(p));
  std::vector<ComplexBox> out;
  if (f.degree() < 1) return out;
  auto reals = isolate_real_roots(f);
  for (const auto& iv : reals) out.push_back({iv, {Rational(0), Rational(0)}});
  const int n = f.degree();
  const int pairs = (n - static_cast<int>(reals.size())) / 2;
  if (pairs > 0) {
    int bits = std::max(working_precision(), 128);
    bool done = false;
    for (int round = 0; round < 6 && !done; ++round, bits *= 2) {
      PrecisionScope scope(bits);
      std::vector<Complex> approx;
      try {
        approx = aberth_roots(f);
      } catch (const Error&) {
        continue;
      }
      std::vector<std::size_t> order(approx.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return approx[a].im > approx[b].im; });
      std::vector<ComplexBox> upper;
      bool ok = true;
      for (int k = 0; k < pairs && ok; ++k) {
        const Complex& z = approx[order[static_cast<std::size_t>(k)]];
        if (z.im.sign() <= 0) {
          ok = false;
          break;
        }
        std::vector<Complex> others;
        for (std::size_t j = 0; j < approx.size(); ++j) {
          if (j != order[static_cast<std::size_t>(k)]) others.push_back(approx[j]);
        }
        auto box = certify_nonreal_box(f, z, others);
        if (!box) {
          ok = false;
          break;
        }
        upper.push_back(*box);
      }
      if (!ok) continue;
      for (const auto& b : upper) {
        out.push_back(b);
        out.push_back(b.conjugate());
      }
      done = true;
    }
    if (!done) throw computation_error("could not certify isolating boxes for the complex roots");
  }
  std::sort(out.begin(), out.end(), box_less);
  return out;
}

}  // namespace trigfield
