#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trigfield/error.hpp"
#include "trigfield/rational.hpp"

namespace trigfield {

/// Dense univariate polynomial over a field K, coefficients lowest degree
/// first. The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
///
/// K needs field arithmetic, equality and construction from int.
template <typename K>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<K> coeffs) : coeffs_(coeffs) { trim(); }

  static DensePoly constant(const K& c) { return DensePoly(std::vector<K>{c}); }
  static DensePoly monomial(const K& c, int degree) {
    std::vector<K> v(static_cast<std::size_t>(degree) + 1, K(0));
    v.back() = c;
    return DensePoly(std::move(v));
  }
  static DensePoly x() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<K>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i; zero outside the stored range.
  K coeff(int i) const {
    if (i < 0 || i > degree()) return K(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const K& leading() const {
    if (coeffs_.empty()) throw usage_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const DensePoly& o) {
    *this = *this * o;
    return *this;
  }
  DensePoly& operator*=(const K& s) {
    if (s == K(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const K& s) { return a *= s; }
  friend DensePoly operator*(const K& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == K(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(out));
  }
  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; deg(remainder) < deg(divisor).
  std::pair<DensePoly, DensePoly> divmod(const DensePoly& divisor) const {
    if (divisor.is_zero()) throw usage_error("division by the zero polynomial");
    if (degree() < divisor.degree()) return {DensePoly(), *this};
    std::vector<K> rem = coeffs_;
    const int dd = divisor.degree();
    std::vector<K> quot(static_cast<std::size_t>(degree() - dd) + 1, K(0));
    const K inv_lead = K(1) / divisor.leading();
    for (int i = degree(); i >= dd; --i) {
      const K& top = rem[static_cast<std::size_t>(i)];
      if (top == K(0)) continue;
      K factor = top * inv_lead;
      for (int j = 0; j <= dd; ++j) {
        rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
      }
      quot[static_cast<std::size_t>(i - dd)] = std::move(factor);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
  }
  DensePoly operator/(const DensePoly& d) const { return divmod(d).first; }
  DensePoly operator%(const DensePoly& d) const { return divmod(d).second; }

  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<K> out(coeffs_.size() - 1, K(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * K(static_cast<int>(i));
    return DensePoly(std::move(out));
  }

  DensePoly monic() const {
    if (is_zero()) return {};
    return *this * (K(1) / leading());
  }

  K eval(const K& at) const {
    K acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// p(q(x)).
  DensePoly compose(const DensePoly& q) const {
    DensePoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  DensePoly pow(unsigned n) const {
    DensePoly result = constant(K(1));
    DensePoly base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  /// p(x^n).
  DensePoly inflate(int n) const {
    if (is_zero()) return {};
    std::vector<K> out(static_cast<std::size_t>(degree() * n) + 1, K(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(n)] = coeffs_[i];
    return DensePoly(std::move(out));
  }

  /// x^deg p(1/x).
  DensePoly reversed() const {
    std::vector<K> out(coeffs_.rbegin(), coeffs_.rend());
    return DensePoly(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

/// Monic gcd over a field. Throws when both inputs are zero.
template <typename K>
DensePoly<K> gcd(DensePoly<K> a, DensePoly<K> b) {
  if (a.is_zero() && b.is_zero()) throw usage_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    DensePoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <typename K>
struct ExtendedGcd {
  DensePoly<K> g, s, t;
};

template <typename K>
ExtendedGcd<K> extended_gcd(const DensePoly<K>& a, const DensePoly<K>& b) {
  if (a.is_zero() && b.is_zero()) throw usage_error("gcd of two zero polynomials");
  DensePoly<K> r0 = a, r1 = b;
  DensePoly<K> s0 = DensePoly<K>::constant(K(1)), s1;
  DensePoly<K> t0, t1 = DensePoly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    DensePoly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    DensePoly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  K inv = K(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Resultant over a field by the Euclidean remainder sequence; over a field
/// the subresultant PRS reduces to this recurrence:
///   Res(a,b) = (-1)^(deg a * deg b) lc(b)^(deg a - deg r) Res(b, r),  r = a mod b.
template <typename K>
K resultant(DensePoly<K> a, DensePoly<K> b) {
  if (a.is_zero() || b.is_zero()) throw usage_error("resultant with a zero polynomial");
  K result(1);
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) {
      K lb = b.leading();
      for (int i = 0; i < da; ++i) result *= lb;
      return result;
    }
    if (da == 0) {
      K la = a.leading();
      for (int i = 0; i < db; ++i) result *= la;
      return result;
    }
    DensePoly<K> r = a % b;
    if (r.is_zero()) return K(0);
    if ((da % 2 == 1) && (db % 2 == 1)) result = -result;
    K lb = b.leading();
    for (int i = 0; i < da - r.degree(); ++i) result *= lb;
    a = std::move(b);
    b = std::move(r);
  }
}

/// Squarefree part p / gcd(p, p'), monic. Characteristic zero only.
template <typename K>
DensePoly<K> squarefree_part(const DensePoly<K>& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : DensePoly<K>::constant(K(1));
  return (p / gcd(p, p.derivative())).monic();
}

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
template <typename K>
DensePoly<K> interpolate(const std::vector<Rational>& xs, const std::vector<K>& ys) {
  const std::size_t n = xs.size();
  if (n != ys.size() || n == 0) throw usage_error("interpolate needs matching nonempty node lists");
  std::vector<K> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational span = xs[i] - xs[i - level];
      dd[i] = (dd[i] - dd[i - 1]) * K(Rational(1) / span);
    }
  }
  DensePoly<K> acc = DensePoly<K>::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * DensePoly<K>{K(-xs[i]), K(1)} + DensePoly<K>::constant(dd[i]);
  }
  return acc;
}

using Poly = DensePoly<Rational>;

/// Rendering in the project-wide text format, e.g. `5*x^6 - 6*x^3 + 5`.
std::string to_string(const Poly& p, const std::string& var = "x");

/// Integer content of a nonzero rational polynomial, as a positive rational
/// c such that p / c is a primitive integer polynomial.
Rational content(const Poly& p);
/// Primitive integer form with positive leading coefficient.
Poly primitive_part(const Poly& p);

/// Shifts the variable: p(x + k).
Poly taylor_shift(const Poly& p, const Rational& k);
/// x^deg p(x / s) scaled so that roots are multiplied by s.
Poly scale_roots(const Poly& p, const Rational& s);

/// Quotient and remainder (poly_arith divmod).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Euler totient.
long euler_phi(long n);
/// n-th cyclotomic polynomial.
Poly cyclotomic(int n);
/// Dickson polynomial D_n(x, 1): D0 = 2, D1 = x, Dn = x D(n-1) - D(n-2).
Poly dickson(int n);

/// Cauchy bound: every complex root has modulus < bound.
Rational root_bound(const Poly& p);

}  // namespace trigfield
