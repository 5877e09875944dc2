#include "trigfield/poly.hpp"

#include <algorithm>

namespace trigfield {

namespace {

std::string monomial_text(int degree, const std::string& var) {
  if (degree == 0) return "";
  if (degree == 1) return var;
  return var + "^" + std::to_string(degree);
}

}  // namespace

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (d == 0) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += monomial_text(d, var);
    } else {
      out += to_string(mag) + "*" + monomial_text(d, var);
    }
  }
  return out;
}

Rational content(const Poly& p) {
  if (p.is_zero()) throw usage_error("content of the zero polynomial");
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  return make_rational(num_gcd, den_lcm);
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (p.leading() < 0) c = -c;
  return p * (Rational(1) / c);
}

Poly taylor_shift(const Poly& p, const Rational& k) {
  return p.compose(Poly{k, Rational(1)});
}

Poly scale_roots(const Poly& p, const Rational& s) {
  if (s == 0) throw usage_error("scale_roots by zero");
  std::vector<Rational> out = p.coefficients();
  Rational power = 1;
  for (int i = p.degree(); i >= 0; --i) {
    out[static_cast<std::size_t>(i)] *= power;
    power *= s;
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) { return a.divmod(b); }

long euler_phi(long n) {
  if (n < 1) throw usage_error("euler_phi requires n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Poly x_power_minus_one(int d) { return Poly::monomial(Rational(1), d) - Poly::constant(Rational(1)); }

}  // namespace

Poly cyclotomic(int n) {
  if (n < 1) throw usage_error("cyclotomic requires n >= 1");
  Poly num = Poly::constant(Rational(1));
  Poly den = Poly::constant(Rational(1));
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(n / d);
    if (mu == 1) num = num * x_power_minus_one(d);
    if (mu == -1) den = den * x_power_minus_one(d);
  }
  auto [q, r] = num.divmod(den);
  if (!r.is_zero()) throw computation_error("cyclotomic division left a remainder");
  return q;
}

Poly dickson(int n) {
  if (n < 0) throw usage_error("dickson requires n >= 0");
  Poly prev = Poly::constant(Rational(2));
  if (n == 0) return prev;
  Poly cur = Poly::x();
  for (int k = 2; k <= n; ++k) {
    Poly next = Poly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational root_bound(const Poly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational best = 0;
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficients()[static_cast<std::size_t>(i)] / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

}  // namespace trigfield
