#include "trigfield/ratfunc.hpp"

#include <algorithm>

namespace trigfield {

RatFunc::RatFunc(const Rational& v) : num_(Poly::constant(v)), den_(Poly::constant(Rational(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw usage_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d == 0) throw usage_error("rational function evaluated at a pole");
  return num_.eval(at) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw usage_error("division by zero in Q(c)");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

bool is_single_term(const Poly& p) {
  int nonzero = 0;
  for (const auto& c : p.coefficients()) nonzero += (c != 0) ? 1 : 0;
  return nonzero <= 1;
}

// Appends the terms of a c-polynomial with explicit leading sign handling.
void append_terms(std::string& out, const Poly& p, bool first) {
  std::string body = to_string(p, "c");
  if (first) {
    out += body;
    return;
  }
  if (body.front() == '-') {
    out += " - " + body.substr(1);
  } else {
    out += " + " + body;
  }
}

}  // namespace

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.numerator() * (Rational(1) / f.denominator().leading()), "c");
  return "(" + to_string(f.numerator(), "c") + ")/(" + to_string(f.denominator(), "c") + ")";
}

std::string to_string(const PolyC& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const RatFunc& c = p.coefficients()[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    std::string xpart = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
    if (d == 0 && c.is_polynomial()) {
      append_terms(out, c.numerator(), first);
    } else if (c.is_polynomial() && is_single_term(c.numerator())) {
      // Single monomial coefficient such as -11 or 2*c.
      const Poly& n = c.numerator();
      std::string coef = to_string(n, "c");
      bool negative = coef.front() == '-';
      if (negative) coef = coef.substr(1);
      std::string term = coef == "1" ? xpart : coef + "*" + xpart;
      if (first) {
        out += (negative ? "-" : "") + term;
      } else {
        out += (negative ? " - " : " + ") + term;
      }
    } else {
      std::string term = "(" + to_string(c) + ")*" + xpart;
      out += first ? term : " + " + term;
    }
    first = false;
  }
  return out;
}

PolyC to_polyc(const Poly& p) {
  std::vector<RatFunc> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return PolyC(std::move(out));
}

Poly specialize(const PolyC& p, const Rational& at) {
  std::vector<Rational> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.eval(at));
  return Poly(std::move(out));
}

int degree_in_c(const PolyC& p) {
  int best = 0;
  for (const auto& c : p.coefficients()) {
    best = std::max({best, c.numerator().degree(), c.denominator().degree()});
  }
  return best;
}

}  // namespace trigfield
