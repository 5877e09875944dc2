#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "trigfield/rational.hpp"

namespace trigfield {

/// Working precision (bits) for newly created Real values on this thread.
int working_precision();
void set_working_precision(int bits);

/// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

/// Arbitrary-precision binary floating point value backed by MPFR.
///
/// Every value is created at the thread's working precision; arithmetic
/// results take the working precision in effect when they are produced.
class Real {
 public:
  Real();
  Real(int v);   // NOLINT(google-explicit-constructor)
  Real(long v);  // NOLINT(google-explicit-constructor)
  Real(double v);  // NOLINT(google-explicit-constructor)
  explicit Real(const Integer& v);
  explicit Real(const Rational& v);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi();
  static Real parse(const std::string& text);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }
  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact value as a (dyadic) rational. Requires a finite value.
  Rational to_rational() const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  long exponent() const;

  /// Decimal rendering with `digits` significant digits ("%.<d>Rg" style),
  /// negative zero printed as 0.
  std::string to_string(int digits = 40) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real asin(const Real& x);
Real acos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

/// 2^(-bits/2): the incidence/equality tolerance used at a given precision.
Real precision_tolerance(int bits);

}  // namespace trigfield
