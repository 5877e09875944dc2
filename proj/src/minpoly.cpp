#include "trigfield/minpoly.hpp"

#include <sstream>

#include "trigfield/factor.hpp"

namespace trigfield {

namespace {

// Polynomial in c stored in a RatFunc coefficient; throws when it is not one.
const Poly& as_c_poly(const RatFunc& f) {
  if (!f.is_polynomial() || f.denominator().leading() != 1) {
    throw computation_error("expected a polynomial coefficient in c");
  }
  return f.numerator();
}

PolyC squarefree_over_qc(const PolyC& r) {
  const int deg_c = degree_in_c(r);
  const std::vector<Rational> cs = {Rational(1, 3), Rational(1, 5), Rational(2, 7), Rational(3, 11),
                                    Rational(4, 13), Rational(5, 17)};
  std::vector<Poly> specs;
  int best = -1;
  for (const auto& c0 : cs) {
    Poly s = squarefree_part(specialize(r, c0));
    specs.push_back(s);
    best = std::max(best, s.degree());
  }
  std::vector<Rational> nodes;
  std::vector<Poly> good;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (specs[i].degree() == best) {
      nodes.push_back(cs[i]);
      good.push_back(specs[i]);
    }
  }
  if (static_cast<int>(nodes.size()) < deg_c + 1) throw computation_error("too few generic specializations");
  std::vector<RatFunc> coeffs;
  for (int k = 0; k <= best; ++k) {
    std::vector<Rational> ys;
    for (const auto& g : good) ys.push_back(g.coeff(k));
    Poly in_c = interpolate(nodes, ys);
    if (in_c.degree() > deg_c) throw computation_error("specializations are not consistent");
    coeffs.emplace_back(in_c);
  }
  PolyC s(coeffs);
  // Exact checks: s | r and r | s^2 (r has every root at most twice).
  if (!(r % s).is_zero()) throw computation_error("squarefree candidate does not divide");
  PolyC sq = s * s;
  if (sq.degree() >= r.degree() && !(sq % r).is_zero()) throw computation_error("squarefree candidate is incomplete");
  return s;
}

// Irreducibility over Q(c) of a polynomial monic in x with coefficients in Q[c].
bool certify_irreducible(const PolyC& s) {
  if (degree_in_c(s) == 1) {
    std::vector<Rational> a, b;
    for (const auto& coef : s.coefficients()) {
      const Poly& p = as_c_poly(coef);
      a.push_back(p.coeff(0));
      b.push_back(p.coeff(1));
    }
    // Linear in c: s = A(x) + c B(x) is irreducible when gcd(A, B) = 1.
    Poly pa(a), pb(b);
    if (!pb.is_zero() && gcd(pa, pb).degree() == 0) return true;
  }
  Poly spec = specialize(s, Rational(1, 3));
  return spec.degree() == s.degree() && is_irreducible(spec);
}

Rational pattern_value(int j, int k) {
  Rational kk(k);
  switch (j) {
    case 0:
      return 1;
    case 2:
      return -kk;
    case 4:
      return (kk - 1) * (kk - 2) / 2;
    case 6:
      return -(kk - 1) * (kk - 2) * (kk + 3) / 6;
    case 8:
      return (kk - 1) * (kk - 2) * (kk - 3) * (kk + 4) / 24;
    default:
      return 0;
  }
}

// Coefficient of x^i with the c-dependent part dropped.
Rational base_coeff(const PolyC& p, int i) { return as_c_poly(p.coeff(i)).coeff(0); }

}  // namespace

UnitRadicalResult minpoly_unit_radical(const UnitRadicalSpec& spec) {
  if (spec.n < 1) throw usage_error("unit radical needs n >= 1");
  if (spec.b == 0) {
    throw usage_error("unit radical with b = 0 is degenerate: the raw polynomial is (x^n - 1)^2 or (x^n + 1)^2");
  }
  Rational s2 = spec.a * spec.a + spec.b * spec.b;
  if (!is_perfect_square(s2)) {
    throw usage_error("a^2 + b^2 = " + to_string(s2) + " is not the square of a rational");
  }
  if (2 * spec.n > kInternalFactorCap) throw cap_error("unit radical degree 2n exceeds the factorization cap");
  Rational s = exact_sqrt(s2);
  Poly raw = Poly::monomial(Rational(1), 2 * spec.n) - Poly::monomial(2 * spec.a / s, spec.n) + Poly::constant(1);
  Rational re = spec.a / s;
  Rational im = spec.b / s;
  int n = spec.n;
  auto value = [&](int bits) {
    PrecisionScope scope(bits + 16);
    return principal_root(Complex(Real(re), Real(im)), n);
  };
  AlgebraicNumber root = AlgebraicNumber::select_root(raw, value);
  Poly minpoly = root.integer_minpoly();
  Poly raw_primitive = primitive_part(raw);
  return {minpoly, raw_primitive, minpoly == raw_primitive, root};
}

RootOfUnity is_root_of_unity(const AlgebraicNumber& x) {
  const long d = x.degree();
  // phi(k) >= sqrt(k / 2) bounds the candidate orders.
  for (long k = 1; k <= 2 * d * d; ++k) {
    if (euler_phi(k) != d) continue;
    if (cyclotomic(static_cast<int>(k)) == x.minpoly()) return {true, k};
  }
  return {false, std::nullopt};
}

PolyC minpoly_sum_conj(int n) {
  if (n < 1) throw usage_error("sum-conj needs n >= 1");
  const RatFunc c = RatFunc::parameter();
  PolyC f = PolyC::monomial(RatFunc(1), 2 * n) - PolyC::monomial(c * RatFunc(2), n) + PolyC::constant(RatFunc(1));
  // R(w) = Res_z(z^2 - w z + 1, f(z)), of degree 2n in w.
  std::vector<Rational> nodes;
  std::vector<RatFunc> values;
  for (int k = 0; k <= 2 * n; ++k) {
    Rational w(k);
    PolyC quad{RatFunc(1), RatFunc(-w), RatFunc(1)};
    nodes.push_back(w);
    values.push_back(resultant(quad, f));
  }
  PolyC r = interpolate(nodes, values);
  PolyC s = squarefree_over_qc(r).monic();
  if (!certify_irreducible(s)) throw computation_error("could not certify irreducibility over Q(c)");

  // Numeric sanity check at c = 1/2.
  {
    PrecisionScope scope(256);
    Real c0(Rational(1, 2));
    Complex z = principal_root(Complex(c0, sqrt(Real(1) - c0 * c0)), n);
    Real w = z.re * Real(2);
    Poly s0 = specialize(s, Rational(1, 2));
    Real acc;
    for (int i = s0.degree(); i >= 0; --i) acc = acc * w + Real(s0.coeff(i));
    if (abs(acc) > ldexp(Real(1), -100)) throw computation_error("sum-conj polynomial failed the numeric check");
  }
  return s;
}

PatternAudit audit_s_patterns(int max_n) {
  if (max_n < 3) throw usage_error("audit needs max_n >= 3");
  PatternAudit audit;
  audit.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) audit.rows.push_back(minpoly_sum_conj(n));

  const RatFunc two_c = RatFunc::parameter() * RatFunc(2);
  for (int n = 1; n <= max_n; ++n) {
    const PolyC& row = audit.rows[static_cast<std::size_t>(n - 1)];
    PolyC expected = to_polyc(dickson(n)) - PolyC::constant(two_c);
    if (!(row == expected) && audit.dickson_pass) {
      audit.dickson_pass = false;
      audit.dickson_first_fail = n;
    }
    bool closed = row.degree() == n;
    for (int j = 0; closed && 2 * j <= n; ++j) {
      Rational formula = Rational(n) / Rational(n - j) * Rational(binomial(static_cast<unsigned long>(n - j),
                                                                            static_cast<unsigned long>(j)));
      if (j % 2 == 1) formula = -formula;
      if (base_coeff(row, n - 2 * j) != formula) closed = false;
    }
    for (int i = 1; closed && i <= n; ++i) {
      if (as_c_poly(row.coeff(i)).degree() > 0) closed = false;
    }
    if (closed && row.coeff(0) != RatFunc(Poly{base_coeff(row, 0), Rational(-2)})) closed = false;
    if (!closed && audit.closed_form_pass) {
      audit.closed_form_pass = false;
      audit.closed_form_first_fail = n;
    }
  }

  struct Spec {
    const char* name;
    const char* formula;
    std::vector<int> js;
  };
  std::vector<int> odd;
  for (int j = 1; j <= max_n; j += 2) odd.push_back(j);
  const std::vector<Spec> specs = {
      {"S_odd", "0", odd},
      {"S_0", "1", {0}},
      {"S_2", "-k", {2}},
      {"S_4", "(k-1)(k-2)/2", {4}},
      {"S_6", "-(k-1)(k-2)(k+3)/6", {6}},
      {"S_8", "(k-1)(k-2)(k-3)(k+4)/24", {8}},
  };
  for (const auto& spec : specs) {
    PatternCheck check;
    check.name = spec.name;
    check.formula = spec.formula;
    for (int k = 3; k <= max_n; ++k) {
      const PolyC& row = audit.rows[static_cast<std::size_t>(k - 1)];
      for (int j : spec.js) {
        int power = k - j;
        // The constant coefficient carries the -2c term and is not compared.
        if (power < 1) continue;
        ++check.checked;
        Rational actual = base_coeff(row, power);
        Rational expected = pattern_value(j, k);
        if (actual != expected && check.pass) {
          check.pass = false;
          check.first_k = k;
          check.power = power;
          check.actual = actual;
          check.expected = expected;
        }
      }
    }
    audit.patterns.push_back(check);
  }
  return audit;
}

std::string render_audit(const PatternAudit& audit) {
  std::ostringstream out;
  out << "S-pattern audit, n = 3.." << audit.max_n << " (S_j(k) is the coefficient of x^(k-j); constant terms skipped)\n";
  for (const auto& p : audit.patterns) {
    out << p.name << " = " << p.formula << ": " << (p.pass ? "PASS" : "FAIL") << " (" << p.checked
        << " coefficients)";
    if (!p.pass) {
      out << ", first counterexample k=" << *p.first_k << ": coefficient of x^" << *p.power << " is "
          << to_string(p.actual) << ", formula gives " << to_string(p.expected);
    }
    out << "\n";
  }
  out << "Dickson D_n(x) - 2*c, n = 1.." << audit.max_n << ": " << (audit.dickson_pass ? "PASS" : "FAIL");
  if (!audit.dickson_pass) out << ", first failure n=" << *audit.dickson_first_fail;
  out << "\n";
  out << "closed form (-1)^j n/(n-j) C(n-j,j): " << (audit.closed_form_pass ? "PASS" : "FAIL");
  if (!audit.closed_form_pass) out << ", first failure n=" << *audit.closed_form_first_fail;
  out << "\n";
  return out.str();
}

}  // namespace trigfield
