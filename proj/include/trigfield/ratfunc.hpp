#pragma once

#include <string>

#include "trigfield/poly.hpp"

namespace trigfield {

/// Element of Q(c): numerator/denominator in the parameter c, kept with a
/// monic denominator and coprime parts so equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(Rational(1))) {}
  RatFunc(int v) : RatFunc(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& v);                // NOLINT(google-explicit-constructor)
  explicit RatFunc(Poly num) : RatFunc(std::move(num), Poly::constant(Rational(1))) {}
  RatFunc(Poly num, Poly den);

  /// The parameter c itself.
  static RatFunc parameter() { return RatFunc(Poly::x()); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_zero() const { return num_.is_zero(); }

  /// Value at c = at. Throws when the denominator vanishes there.
  Rational eval(const Rational& at) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

std::string to_string(const RatFunc& f);

/// Polynomial in x with coefficients in Q(c).
using PolyC = DensePoly<RatFunc>;

/// Rendering such as `x^4 - 4*x^2 - 2*c + 2`: x powers descending, the
/// constant coefficient expanded in descending powers of c.
std::string to_string(const PolyC& p);

PolyC to_polyc(const Poly& p);
/// Substitutes c = at.
Poly specialize(const PolyC& p, const Rational& at);
/// Max degree in c over numerators and denominators.
int degree_in_c(const PolyC& p);

}  // namespace trigfield
