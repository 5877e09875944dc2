#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trigfield/roots.hpp"

namespace trigfield {

/// Exact algebraic number: monic irreducible minimal polynomial over Q plus a
/// rational box isolating exactly one of its roots.
class AlgebraicNumber {
 public:
  /// Validates irreducibility and that the box isolates one root.
  AlgebraicNumber(const Poly& minpoly, const ComplexBox& box);

  static AlgebraicNumber from_rational(const Rational& q);
  /// The root of the irreducible polynomial f nearest to `approx`.
  static AlgebraicNumber root_of(const Poly& f, const Complex& approx);
  /// All roots of an irreducible polynomial, in isolate_roots order.
  static std::vector<AlgebraicNumber> roots_of(const Poly& f);
  /// The root of p (any nonzero polynomial) equal to the value described by
  /// `value(bits)`, which must return an approximation within 2^-bits.
  static AlgebraicNumber select_root(const Poly& p, const std::function<Complex(int)>& value);

  const Poly& minpoly() const { return minpoly_; }
  /// Minimal polynomial in primitive integer form.
  Poly integer_minpoly() const { return primitive_part(minpoly_); }
  const ComplexBox& box() const { return box_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }
  Rational rational_value() const;
  bool is_real() const { return box_.is_real(); }
  bool is_zero() const { return is_rational() && minpoly_.coeff(0) == 0; }

  /// Value within 2^-bits (in each coordinate) of the exact number.
  Complex approx(int bits) const;

  /// `minpoly=<poly>; box=[reLo,reHi]x[imLo,imHi]`.
  std::string to_record() const;

 private:
  struct Unchecked {};
  AlgebraicNumber(const Poly& minpoly, const ComplexBox& box, Unchecked);

  Poly minpoly_;
  ComplexBox box_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };
enum class UnaryOp { kNeg, kConj, kRe, kIm, kAbs };

AlgebraicNumber alg_arith(const AlgebraicNumber& x, const AlgebraicNumber& y, ArithOp op);
AlgebraicNumber alg_unary(const AlgebraicNumber& x, UnaryOp op);
/// Principal n-th root, argument in (-pi/n, pi/n].
AlgebraicNumber nth_root(const AlgebraicNumber& x, int n);
AlgebraicNumber inverse(const AlgebraicNumber& x);

inline AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_arith(a, b, ArithOp::kAdd);
}
inline AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_arith(a, b, ArithOp::kSub);
}
inline AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_arith(a, b, ArithOp::kMul);
}
inline AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return alg_arith(a, b, ArithOp::kDiv);
}
inline AlgebraicNumber operator-(const AlgebraicNumber& a) { return alg_unary(a, UnaryOp::kNeg); }

/// The imaginary unit.
AlgebraicNumber imaginary_unit();

}  // namespace trigfield
