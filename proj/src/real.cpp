#include "trigfield/real.hpp"

#include <cstdlib>
#include <string>

#include "trigfield/error.hpp"

namespace trigfield {

namespace {
thread_local int g_precision = 256;
}

int working_precision() { return g_precision; }

void set_working_precision(int bits) {
  if (bits < 2) throw usage_error("precision must be at least 2 bits");
  g_precision = bits;
}

PrecisionScope::PrecisionScope(int bits) : saved_(g_precision) { set_working_precision(bits); }
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

Real::Real() {
  mpfr_init2(value_, g_precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
  mpfr_init2(value_, g_precision);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(value_, g_precision);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(const Integer& v) {
  mpfr_init2(value_, g_precision);
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& v) {
  mpfr_init2(value_, g_precision);
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& text) {
  Real r;
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw usage_error("malformed number '" + text + "'");
  }
  return r;
}

Rational Real::to_rational() const {
  if (!is_finite()) throw computation_error("non-finite value has no rational form");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

long Real::exponent() const {
  if (is_zero() || !is_finite()) return 0;
  return mpfr_get_exp(value_);
}

std::string Real::to_string(int digits) const {
  if (is_zero()) return "0";
  char* buffer = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buffer, fmt.c_str(), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

namespace {

// Result precision: the working precision at the time of the operation.
template <typename Op>
Real& apply(Real& self, const Real& o, Op op) {
  if (self.precision() != g_precision) {
    mpfr_prec_round(self.get(), g_precision, MPFR_RNDN);
  }
  op(self.get(), self.get(), o.get(), MPFR_RNDN);
  return self;
}

}  // namespace

Real& Real::operator+=(const Real& o) { return apply(*this, o, mpfr_add); }
Real& Real::operator-=(const Real& o) { return apply(*this, o, mpfr_sub); }
Real& Real::operator*=(const Real& o) { return apply(*this, o, mpfr_mul); }
Real& Real::operator/=(const Real& o) { return apply(*this, o, mpfr_div); }

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r;
  fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real cot(const Real& x) { return unary(x, mpfr_cot); }
Real asin(const Real& x) { return unary(x, mpfr_asin); }
Real acos(const Real& x) { return unary(x, mpfr_acos); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real precision_tolerance(int bits) { return ldexp(Real(1), -(bits / 2)); }

}  // namespace trigfield
