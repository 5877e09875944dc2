#include "trigfield/complex.hpp"

namespace trigfield {

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) {
  // Negative zero imaginary parts must not select -pi.
  if (z.im.is_zero()) return z.re.sign() < 0 ? Real::pi() : Real(0);
  return atan2(z.im, z.re);
}

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sin(const Complex& z) { return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)}; }

Complex cos(const Complex& z) { return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))}; }

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1)) / pow(z, -n);
  Complex result(Real(1));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

Complex principal_root(const Complex& z, long n) {
  if (z.re.is_zero() && z.im.is_zero()) return {};
  // arg(z) in (-pi, pi] so arg/n in (-pi/n, pi/n].
  Real modulus = exp(log(abs(z)) / Real(n));
  return polar(modulus, arg(z) / Real(n));
}

std::string to_string(const Complex& z, int digits) {
  std::string out = z.re.to_string(digits);
  if (z.im.sign() < 0) {
    out += " - " + (-z.im).to_string(digits) + "i";
  } else {
    out += " + " + z.im.to_string(digits) + "i";
  }
  return out;
}

}  // namespace trigfield
