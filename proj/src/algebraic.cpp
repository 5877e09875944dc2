#include "trigfield/algebraic.hpp"

#include <algorithm>

#include "trigfield/factor.hpp"

namespace trigfield {

namespace {

int qsign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

std::vector<Real> real_coeffs(const Poly& f) {
  std::vector<Real> out;
  for (const auto& c : f.coefficients()) out.emplace_back(c);
  return out;
}

Real eval_real(const std::vector<Real>& c, const Real& x) {
  Real acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex eval_cplx(const std::vector<Real>& c, const Complex& z) {
  Complex acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

std::vector<Real> derivative_coeffs(const Poly& f) { return real_coeffs(f.derivative()); }

Real approx_real_root(const Poly& f, RealInterval iv, int bits) {
  if (iv.is_point()) return Real(iv.lo);
  auto c = real_coeffs(f);
  auto dc = derivative_coeffs(f);
  const Rational delta = Rational(1, 2) / Rational(Integer(1) << static_cast<unsigned>(bits));
  const Real step_tol = ldexp(Real(1), -(bits + 16));
  for (int attempt = 0; attempt < 400; ++attempt) {
    if (iv.width() <= 2 * delta) return Real(iv.midpoint());
    Real z(iv.midpoint());
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      Real d = eval_real(dc, z);
      if (d.is_zero()) break;
      Real step = eval_real(c, z) / d;
      z -= step;
      if (abs(step) <= step_tol * max(Real(1), abs(z))) {
        converged = true;
        break;
      }
    }
    if (converged && z.is_finite()) {
      Rational zr = z.to_rational();
      Rational a = std::max<Rational>(iv.lo, zr - delta);
      Rational b = std::min<Rational>(iv.hi, zr + delta);
      if (a < b) {
        int sa = qsign(f.eval(a));
        int sb = qsign(f.eval(b));
        if (sa == 0) return Real(a);
        if (sb == 0) return Real(b);
        if (sa != sb) return Real((a + b) / 2);
      }
    }
    // Newton left the interval or stalled: tighten by bisection and retry.
    Rational w = iv.width() / 256;
    iv = refine_real_root(f, iv, w);
  }
  return Real(iv.midpoint());
}

// Splits the box into quadrants and keeps the one holding the root.
ComplexBox quadrisect(const Poly& f, const ComplexBox& b) {
  for (int shift = 0; shift < 16; ++shift) {
    Rational fx = Rational(1, 2) + Rational(shift, 97);
    Rational fy = Rational(1, 2) - Rational(shift, 89);
    Rational mx = b.re.lo + b.re.width() * fx;
    Rational my = b.im.lo + b.im.width() * fy;
    ComplexBox parts[4] = {
        {{b.re.lo, mx}, {b.im.lo, my}},
        {{mx, b.re.hi}, {b.im.lo, my}},
        {{b.re.lo, mx}, {my, b.im.hi}},
        {{mx, b.re.hi}, {my, b.im.hi}},
    };
    bool clean = true;
    for (const auto& part : parts) {
      auto n = count_roots_in_box(f, part);
      if (!n) {
        clean = false;
        break;
      }
      if (*n == 1) return part;
    }
    if (clean) break;
  }
  throw computation_error("box refinement lost the root");
}

Complex approx_complex_root(const Poly& f, ComplexBox box, int bits) {
  auto c = real_coeffs(f);
  auto dc = derivative_coeffs(f);
  const Real n(f.degree());
  const Real target = ldexp(Real(1), -(bits + 1));
  const Real step_tol = ldexp(Real(1), -(bits + 16));
  for (int attempt = 0; attempt < 200; ++attempt) {
    if (box.size() < Rational(1) / Rational(Integer(1) << static_cast<unsigned>(bits + 1))) return box.center();
    Complex z = box.center();
    for (int it = 0; it < 100; ++it) {
      Complex d = eval_cplx(dc, z);
      if (d.re.is_zero() && d.im.is_zero()) break;
      Complex step = eval_cplx(c, z) / d;
      z -= step;
      if (abs(step) <= step_tol * max(Real(1), abs(z))) break;
    }
    if (z.re.is_finite() && z.im.is_finite()) {
      Complex d = eval_cplx(dc, z);
      if (!(d.re.is_zero() && d.im.is_zero())) {
        // Some root lies within deg * |f/f'| of z.
        Real radius = n * abs(eval_cplx(c, z)) / abs(d);
        radius = radius * Real(1.001) + ldexp(Real(1), -(bits + 40));
        bool inside = z.re - radius > Real(box.re.lo) && z.re + radius < Real(box.re.hi) &&
                      z.im - radius > Real(box.im.lo) && z.im + radius < Real(box.im.hi);
        if (inside && radius <= target) return z;
      }
    }
    box = quadrisect(f, box);
  }
  return box.center();
}

Poly negate_roots(const Poly& f) { return f.compose(Poly{Rational(0), Rational(-1)}).monic(); }

// log2 of |value| rounded up, from a coarse approximation.
long magnitude_exponent(const AlgebraicNumber& x) {
  Complex v = x.approx(64);
  Real m = abs(v);
  if (m.is_zero()) return 0;
  return m.exponent();
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Poly& minpoly, const ComplexBox& box, Unchecked)
    : minpoly_(minpoly.monic()), box_(box) {}

AlgebraicNumber::AlgebraicNumber(const Poly& minpoly, const ComplexBox& box) : minpoly_(minpoly.monic()), box_(box) {
  if (minpoly_.degree() < 1) throw usage_error("minimal polynomial must have degree >= 1");
  if (box.re.lo > box.re.hi || box.im.lo > box.im.hi) throw usage_error("malformed box");
  if (!is_irreducible(minpoly_)) throw usage_error("polynomial " + to_string(minpoly_) + " is not irreducible");
  if (box.is_real()) {
    if (box.re.is_point()) {
      if (minpoly_.eval(box.re.lo) != 0) throw usage_error("box point is not a root");
    } else if (SturmSequence(minpoly_).count_closed(box.re.lo, box.re.hi) != 1) {
      throw usage_error("interval does not isolate exactly one real root");
    }
    return;
  }
  if (box.re.width() == 0 || box.im.width() == 0) throw usage_error("degenerate box for a nonreal root");
  auto n = count_roots_in_box(minpoly_, box);
  if (!n || *n != 1) throw usage_error("box does not isolate exactly one root");
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
  return AlgebraicNumber(Poly{-q, Rational(1)}, ComplexBox{{q, q}, {Rational(0), Rational(0)}}, Unchecked{});
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw usage_error("algebraic number is not rational");
  return -minpoly_.coeff(0);
}

Complex AlgebraicNumber::approx(int bits) const {
  PrecisionScope scope(bits + 64);
  if (is_rational()) return Complex(Real(rational_value()));
  if (is_real()) return Complex(approx_real_root(minpoly_, box_.re, bits));
  return approx_complex_root(minpoly_, box_, bits);
}

std::string AlgebraicNumber::to_record() const { return "minpoly=" + to_string(minpoly_) + "; box=" + to_string(box_); }

AlgebraicNumber AlgebraicNumber::root_of(const Poly& f_in, const Complex& approx) {
  Poly f = f_in.monic();
  if (f.degree() < 1) throw usage_error("root_of needs a nonconstant polynomial");
  if (f.degree() == 1) return from_rational(-f.coeff(0));
  int bits = std::max(working_precision(), 128);
  for (int round = 0; round < 5; ++round, bits *= 2) {
    PrecisionScope scope(bits);
    std::vector<Complex> roots;
    try {
      roots = aberth_roots(f);
    } catch (const Error&) {
      continue;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < roots.size(); ++i) {
      if (abs(roots[i] - approx) < abs(roots[best] - approx)) best = i;
    }
    const Complex& z = roots[best];
    Real tiny = ldexp(Real(1), -(bits / 2));
    if (abs(z.im) < tiny * max(Real(1), abs(z))) {
      auto reals = isolate_real_roots(f);
      if (reals.empty()) continue;
      Real target = z.re;
      std::vector<RealInterval> hits;
      for (auto iv : reals) {
        while (true) {
          bool in = Real(iv.lo) - tiny <= target && target <= Real(iv.hi) + tiny;
          if (!in) break;
          if (iv.width() < Rational(1, 1 << 20) || iv.is_point()) {
            hits.push_back(iv);
            break;
          }
          iv = refine_real_root(f, iv, iv.width() / 4);
        }
      }
      if (hits.size() == 1) return AlgebraicNumber(f, ComplexBox{hits[0], {Rational(0), Rational(0)}}, Unchecked{});
      continue;
    }
    if (auto box = inclusion_box(f, roots, best)) return AlgebraicNumber(f, *box, Unchecked{});
    std::vector<Complex> others;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i != best) others.push_back(roots[i]);
    }
    if (auto box = certify_nonreal_box(f, z, others)) return AlgebraicNumber(f, *box, Unchecked{});
  }
  // Fall back to full isolation and the nearest box centre.
  auto boxes = isolate_roots(f);
  std::size_t best = 0;
  for (std::size_t i = 1; i < boxes.size(); ++i) {
    if (abs(boxes[i].center() - approx) < abs(boxes[best].center() - approx)) best = i;
  }
  return AlgebraicNumber(f, boxes[best], Unchecked{});
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const Poly& f) {
  std::vector<AlgebraicNumber> out;
  Poly m = f.monic();
  for (const auto& b : isolate_roots(m)) out.push_back(AlgebraicNumber(m, b, Unchecked{}));
  return out;
}

AlgebraicNumber AlgebraicNumber::select_root(const Poly& p, const std::function<Complex(int)>& value) {
  std::vector<Poly> factors = irreducible_factors(p);
  if (factors.empty()) throw computation_error("no candidate polynomial for root selection");
  for (int round = 0; round < 16; ++round) {
    int bits = 64 << std::min(round, 10);
    PrecisionScope scope(bits + 32);
    Complex v = value(bits);
    Real tol = ldexp(Real(1), -(bits / 2)) * max(Real(1), abs(v));
    std::vector<std::pair<std::size_t, Complex>> survivors;
    bool failed = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      Poly f = factors[i].monic();
      std::vector<Complex> roots;
      try {
        roots = aberth_roots(f);
      } catch (const Error&) {
        failed = true;
        break;
      }
      for (const auto& r : roots) {
        if (abs(r - v) < tol) survivors.emplace_back(i, r);
      }
    }
    if (failed || survivors.size() != 1) continue;
    return root_of(factors[survivors[0].first], survivors[0].second);
  }
  throw computation_error("factor selection did not converge");
}

AlgebraicNumber imaginary_unit() {
  return AlgebraicNumber::root_of(Poly{Rational(1), Rational(0), Rational(1)}, Complex(Real(0), Real(1)));
}

AlgebraicNumber inverse(const AlgebraicNumber& x) {
  if (x.is_zero()) throw usage_error("division by zero");
  if (x.is_rational()) return AlgebraicNumber::from_rational(1 / x.rational_value());
  long e = magnitude_exponent(x);
  int guard = 8 + static_cast<int>(std::max(0L, -2 * e + 2));
  auto value = [&](int bits) { return Complex(Real(1)) / x.approx(bits + guard); };
  return AlgebraicNumber::select_root(x.minpoly().reversed(), value);
}

AlgebraicNumber alg_arith(const AlgebraicNumber& x, const AlgebraicNumber& y, ArithOp op) {
  switch (op) {
    case ArithOp::kSub:
      return alg_arith(x, alg_unary(y, UnaryOp::kNeg), ArithOp::kAdd);
    case ArithOp::kDiv:
      return alg_arith(x, inverse(y), ArithOp::kMul);
    case ArithOp::kAdd: {
      if (x.is_rational() && y.is_rational()) return AlgebraicNumber::from_rational(x.rational_value() + y.rational_value());
      if (x.is_rational() || y.is_rational()) {
        const AlgebraicNumber& a = x.is_rational() ? y : x;
        Rational q = x.is_rational() ? x.rational_value() : y.rational_value();
        Poly shifted = taylor_shift(a.minpoly(), -q);
        ComplexBox b{{a.box().re.lo + q, a.box().re.hi + q}, a.box().im};
        return AlgebraicNumber(shifted, b);
      }
      const Poly& p = x.minpoly();
      const Poly& q = y.minpoly();
      const int n = p.degree() * q.degree();
      std::vector<Rational> nodes;
      std::vector<Rational> values;
      for (int k = 0; k <= n; ++k) {
        Rational t(k);
        nodes.push_back(t);
        values.push_back(resultant(p, q.compose(Poly{t, Rational(-1)})));
      }
      Poly r = interpolate(nodes, values);
      auto value = [&](int bits) { return x.approx(bits + 2) + y.approx(bits + 2); };
      return AlgebraicNumber::select_root(r, value);
    }
    case ArithOp::kMul: {
      if (x.is_zero() || y.is_zero()) return AlgebraicNumber::from_rational(Rational(0));
      if (x.is_rational() && y.is_rational()) return AlgebraicNumber::from_rational(x.rational_value() * y.rational_value());
      if (x.is_rational() || y.is_rational()) {
        const AlgebraicNumber& a = x.is_rational() ? y : x;
        Rational s = x.is_rational() ? x.rational_value() : y.rational_value();
        Poly scaled = scale_roots(a.minpoly(), s);
        const ComplexBox& ab = a.box();
        ComplexBox b{{ab.re.lo * s, ab.re.hi * s}, {ab.im.lo * s, ab.im.hi * s}};
        if (s < 0) b = {{b.re.hi, b.re.lo}, {b.im.hi, b.im.lo}};
        return AlgebraicNumber(scaled, b);
      }
      const Poly& p = x.minpoly();
      const Poly& q = y.minpoly();
      const int dq = q.degree();
      const int n = p.degree() * dq;
      std::vector<Rational> nodes;
      std::vector<Rational> values;
      for (int k = 0; k <= n; ++k) {
        Rational t(k);
        // y^dq * q(t / y)
        std::vector<Rational> coeffs(static_cast<std::size_t>(dq) + 1);
        Rational tp = 1;
        for (int j = 0; j <= dq; ++j) {
          coeffs[static_cast<std::size_t>(dq - j)] = q.coeff(j) * tp;
          tp *= t;
        }
        nodes.push_back(t);
        values.push_back(resultant(p, Poly(coeffs)));
      }
      Poly r = interpolate(nodes, values);
      long guard = 4 + std::max(0L, magnitude_exponent(x) + magnitude_exponent(y) + 2);
      auto value = [&](int bits) {
        int b = bits + static_cast<int>(guard);
        return x.approx(b) * y.approx(b);
      };
      return AlgebraicNumber::select_root(r, value);
    }
  }
  throw usage_error("unknown arithmetic operation");
}

AlgebraicNumber alg_unary(const AlgebraicNumber& x, UnaryOp op) {
  switch (op) {
    case UnaryOp::kNeg: {
      if (x.is_rational()) return AlgebraicNumber::from_rational(-x.rational_value());
      const ComplexBox& b = x.box();
      return AlgebraicNumber(negate_roots(x.minpoly()), ComplexBox{{-b.re.hi, -b.re.lo}, {-b.im.hi, -b.im.lo}});
    }
    case UnaryOp::kConj:
      if (x.is_real()) return x;
      return AlgebraicNumber(x.minpoly(), x.box().conjugate());
    case UnaryOp::kRe:
      if (x.is_real()) return x;
      return alg_arith(x + alg_unary(x, UnaryOp::kConj), AlgebraicNumber::from_rational(Rational(1, 2)), ArithOp::kMul);
    case UnaryOp::kIm: {
      if (x.is_real()) return AlgebraicNumber::from_rational(Rational(0));
      // (x - conj x) * (-i/2)
      AlgebraicNumber half_i = alg_arith(imaginary_unit(), AlgebraicNumber::from_rational(Rational(-1, 2)), ArithOp::kMul);
      return (x - alg_unary(x, UnaryOp::kConj)) * half_i;
    }
    case UnaryOp::kAbs: {
      if (x.is_rational()) return AlgebraicNumber::from_rational(abs(x.rational_value()));
      if (x.is_real()) return x.approx(64).re.sign() < 0 ? -x : x;
      return nth_root(x * alg_unary(x, UnaryOp::kConj), 2);
    }
  }
  throw usage_error("unknown unary operation");
}

AlgebraicNumber nth_root(const AlgebraicNumber& x, int n) {
  if (n < 1) throw usage_error("nth_root requires n >= 1");
  if (n == 1 || x.is_zero()) return x;
  long e = magnitude_exponent(x);
  int guard = 8 + static_cast<int>(std::max(0L, -e + 1));
  auto value = [&](int bits) { return principal_root(x.approx(bits + guard), n); };
  return AlgebraicNumber::select_root(x.minpoly().inflate(n), value);
}

}  // namespace trigfield
