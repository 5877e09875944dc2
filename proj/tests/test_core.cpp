#include <random>

#include "doctest.h"
#include "trigfield/factor.hpp"
#include "trigfield/poly_parse.hpp"
#include "trigfield/ratfunc.hpp"
#include "trigfield/roots.hpp"
#include "trigfield/sturm.hpp"

using namespace trigfield;

namespace {

Poly P(const char* text) { return parse_poly(text); }

Poly random_poly(std::mt19937& rng, int degree, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = dist(rng);
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

// Brute-force check over F_p: does f have a monic factor of degree <= max_d?
bool has_small_factor_mod(const Poly& f, long p, int max_d) {
  std::vector<long> fc;
  for (const auto& c : f.coefficients()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(p));
    fc.push_back(r.get_si());
  }
  for (int d = 1; d <= max_d; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<long> g(static_cast<std::size_t>(d) + 1);
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      std::vector<long> r = fc;
      for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
        long top = r[static_cast<std::size_t>(i)] % p;
        if (top == 0) continue;
        for (int j = 0; j <= d; ++j) {
          auto& slot = r[static_cast<std::size_t>(i - d + j)];
          slot = ((slot - top * g[static_cast<std::size_t>(j)]) % p + p) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[static_cast<std::size_t>(i)] % p == 0;
      if (zero) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  Rational q = parse_rational("-10/4");
  CHECK(q.get_den() == 2);
  CHECK(q.get_num() == -5);
}

TEST_CASE("polynomial parse and print") {
  CHECK(to_string(P("5*x^6 - 6*x^3 + 5")) == "5*x^6 - 6*x^3 + 5");
  CHECK(to_string(P("(x+1)*(x-1)")) == "x^2 - 1");
  CHECK(to_string(P("x/2 + 7/2")) == "1/2*x + 7/2");
  CHECK(to_string(P("-x")) == "-x");
  CHECK(to_string(Poly()) == "0");
  CHECK_THROWS_AS(parse_poly("x^"), Error);
  CHECK_THROWS_AS(parse_poly("1/(x+1)"), Error);
  CHECK_THROWS_AS(parse_poly("c*x"), Error);
  CHECK_THROWS_AS(parse_poly("3/0"), Error);
  CHECK(to_string(parse_polyc("x^4 - 4*x^2 - 2*c + 2")) == "x^4 - 4*x^2 - 2*c + 2");
  CHECK(to_string(parse_polyc("2*c*x^3 - x")) == "2*c*x^3 - x");
}

TEST_CASE("poly_arith") {
  CHECK(P("x+1") * P("x-1") == P("x^2-1"));
  auto [q, r] = divmod(P("x^3-2"), P("x-1"));
  CHECK(q == P("x^2+x+1"));
  CHECK(r == P("-1"));
  CHECK(P("x^2+3") + Poly() == P("x^2+3"));
  CHECK_THROWS_AS(divmod(P("x"), Poly()), Error);
}

TEST_CASE("poly_gcd") {
  CHECK(gcd(P("x^2-1"), P("x-1")) == P("x-1"));
  CHECK(gcd(P("x^3-2"), P("3*x^2")) == P("1"));
  CHECK(gcd(P("2*x^2+4"), P("2*x^2+4")) == P("x^2+2"));
  CHECK_THROWS_AS(gcd(Poly(), Poly()), Error);
}

TEST_CASE("resultant") {
  CHECK(resultant(P("x-2"), P("x-3")) == -1);
  CHECK(resultant(P("x^2-2"), P("x^2-2")) == 0);
  CHECK(resultant(P("x^2-2"), P("x")) == -2);
  CHECK_THROWS_AS(resultant(Poly(), P("x")), Error);
}

TEST_CASE("resultant over Q(c)") {
  PolyC a = parse_polyc("x^2 - c");
  PolyC b = parse_polyc("x - 1");
  RatFunc r = resultant(a, b);
  CHECK(to_string(r) == "-c + 1");
}

TEST_CASE("sturm_real_root_count") {
  RealInterval w{Rational(-10), Rational(10)};
  CHECK(sturm_real_root_count(P("x^3-3*x-1"), w) == 3);
  CHECK(sturm_real_root_count(P("x^3-2"), w) == 1);
  CHECK(sturm_real_root_count(P("x^2+1"), w) == 0);
  // Half-open windows add up.
  Poly f = P("(x-1)*(x-2)*(x-3)");
  CHECK(sturm_real_root_count(f, {Rational(0), Rational(1)}) == 1);
  CHECK(sturm_real_root_count(f, {Rational(1), Rational(2)}) == 1);
  CHECK(sturm_real_root_count(f, {Rational(0), Rational(3)}) == 3);
  CHECK(sturm_real_root_count(f, {Rational(3), Rational(4)}) == 0);
}

TEST_CASE("sturm agrees with an integer-grid sign-change oracle") {
  Poly f = P("x^3-3*x-1");
  int changes = 0;
  for (int k = -10; k < 10; ++k) {
    if (sign_at(f, Rational(k)) * sign_at(f, Rational(k + 1)) < 0) ++changes;
  }
  CHECK(changes == 3);
}

TEST_CASE("real root isolation") {
  auto roots = isolate_real_roots(P("(x-1)*(x+2)*(2*x-1)*(x^2-2)"));
  REQUIRE(roots.size() == 5);
  CHECK(roots[0].lo <= -2);
  CHECK(roots[0].hi >= -2);
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
  for (const auto& iv : roots) {
    if (!iv.is_point()) CHECK(sign_at(P("(x-1)*(x+2)*(2*x-1)*(x^2-2)"), iv.lo) != 0);
  }
  auto refined = refine_real_root(P("x^2-2"), roots[4], Rational(1, 1000000));
  CHECK(refined.width() <= Rational(1, 1000000));
  CHECK(refined.lo * refined.lo < 2);
  CHECK(refined.hi * refined.hi > 2);
}

TEST_CASE("factor_rationals") {
  auto f = factor_rationals(P("x^4-1"));
  REQUIRE(f.size() == 3);
  CHECK(f[0].poly == P("x-1"));
  CHECK(f[1].poly == P("x+1"));
  CHECK(f[2].poly == P("x^2+1"));
  CHECK(factor_rationals(P("x^3-2")).size() == 1);
  CHECK(eisenstein_irreducible(P("x^3-2")));
  auto g = factor_rationals(P("5*x^6-6*x^3+5"));
  REQUIRE(g.size() == 1);
  CHECK(g[0].multiplicity == 1);
  auto h = factor_rationals(P("(x-1)^3*(x^2+x+1)^2*(3*x+2)"));
  REQUIRE(h.size() == 3);
  CHECK(h[0].poly == P("x-1"));
  CHECK(h[0].multiplicity == 3);
  CHECK(h[1].poly == P("3*x+2"));
  CHECK(h[2].multiplicity == 2);
  CHECK_THROWS_AS(factor_rationals(P("x^25-2")), Error);
  try {
    factor_rationals(P("x^25-2"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapExceeded);
  }
}

TEST_CASE("5x^6-6x^3+5 is irreducible mod 11 by brute force") {
  Poly f = P("5*x^6-6*x^3+5");
  CHECK_FALSE(has_small_factor_mod(f, 11, 3));
  CHECK(is_irreducible(f));
}

TEST_CASE("factoring polynomials with many modular factors") {
  // x^16 + 1 is irreducible but splits into quadratics or linears mod every prime.
  CHECK(is_irreducible(P("x^16+1")));
  auto f = irreducible_factors(P("x^24-1"));
  CHECK(f.size() == 8);
  Poly swinnerton = P("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576");
  CHECK(is_irreducible(swinnerton));
}

TEST_CASE("cyclotomic and euler_phi") {
  CHECK(cyclotomic(1) == P("x-1"));
  CHECK(cyclotomic(8) == P("x^4+1"));
  CHECK(cyclotomic(3) == P("x^2+x+1"));
  CHECK(euler_phi(7) == 6);
  CHECK(euler_phi(1) == 1);
  long brute = 0;
  for (long k = 1; k <= 12; ++k) {
    Integer g;
    mpz_gcd_ui(g.get_mpz_t(), Integer(k).get_mpz_t(), 12);
    if (g == 1) ++brute;
  }
  CHECK(euler_phi(12) == brute);
}

TEST_CASE("dickson") {
  CHECK(dickson(3) == P("x^3-3*x"));
  CHECK(dickson(1) == P("x"));
  CHECK(dickson(6) == P("x^6-6*x^4+9*x^2-2"));
  CHECK(dickson(0) == P("2"));
}

TEST_CASE("property: divmod recomposes") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(rng, deg(rng), 9);
    Poly b = random_poly(rng, deg(rng), 9);
    auto [q, r] = divmod(a, b);
    CHECK(b * q + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("property: resultant vanishes iff common factor") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < 150; ++i) {
    Poly a = random_poly(rng, deg(rng), 5);
    Poly b = random_poly(rng, deg(rng), 5);
    if (i % 3 == 0) {
      Poly common = random_poly(rng, 1, 5);
      a = a * common;
      b = b * common;
    }
    bool zero = resultant(a, b) == 0;
    bool shared = gcd(a, b).degree() > 0;
    CHECK(zero == shared);
  }
}

TEST_CASE("property: sturm count equals isolated roots") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng, deg(rng), 20);
    Integer mx = 0;
    for (const auto& c : p.coefficients()) mx = std::max<Integer>(mx, abs(c.get_num()));
    Rational bound = Rational(mx) + 1;
    CHECK(sturm_real_root_count(p, {-bound, bound}) == static_cast<int>(isolate_real_roots(p).size()));
  }
}

TEST_CASE("property: cyclotomic products") {
  for (int n = 1; n <= 50; ++n) {
    Poly prod = P("1");
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * cyclotomic(d);
    }
    CHECK(prod == Poly::monomial(Rational(1), n) - P("1"));
    CHECK(cyclotomic(n).degree() == euler_phi(n));
  }
}

TEST_CASE("property: Dickson identity") {
  // D_n(t + 1/t) * t^n = t^(2n) + 1.
  for (int n = 1; n <= 40; ++n) {
    Poly d = dickson(n);
    Poly acc;
    Poly sq = P("x^2+1");
    for (int k = 0; k <= d.degree(); ++k) {
      if (d.coeff(k) == 0) continue;
      acc += sq.pow(static_cast<unsigned>(k)) * Poly::monomial(d.coeff(k), n - k);
    }
    CHECK(acc == Poly::monomial(Rational(1), 2 * n) + P("1"));
  }
}

TEST_CASE("property: factor products multiply back") {
  std::mt19937 rng(14);
  std::uniform_int_distribution<int> count(2, 4);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < 200; ++i) {
    Poly prod = P("1");
    int k = count(rng);
    for (int j = 0; j < k; ++j) prod = prod * random_poly(rng, deg(rng), 6);
    if (prod.is_zero()) continue;
    auto factors = factor_rationals(prod);
    Poly back = P("1");
    for (const auto& f : factors) back = back * f.poly.pow(static_cast<unsigned>(f.multiplicity));
    CHECK(primitive_part(back) == primitive_part(prod));
    for (const auto& f : factors) CHECK(f.poly == primitive_part(f.poly));
  }
}

TEST_CASE("count_roots_in_box") {
  ComplexBox big{{Rational(-3), Rational(3)}, {Rational(-3), Rational(3)}};
  CHECK(count_roots_in_box(P("x^5-2"), big) == 5);
  CHECK(count_roots_in_box(P("(x-1)^2*(x^2+1)"), big) == 4);
  ComplexBox upper{{Rational(-1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(3, 2)}};
  CHECK(count_roots_in_box(P("x^2+1"), upper) == 1);
  ComplexBox touching{{Rational(-1), Rational(1)}, {Rational(1), Rational(2)}};
  CHECK_FALSE(count_roots_in_box(P("x^2+1"), touching).has_value());
  ComplexBox empty{{Rational(5), Rational(6)}, {Rational(5), Rational(6)}};
  CHECK(count_roots_in_box(P("x^2+1"), empty) == 0);
}

TEST_CASE("isolate_roots") {
  auto i = isolate_roots(P("x^2+1"));
  REQUIRE(i.size() == 2);
  CHECK(i[0].contains(Complex(Real(0), Real(-1))));
  CHECK(i[1].contains(Complex(Real(0), Real(1))));
  auto c = isolate_roots(P("x^3-2"));
  REQUIRE(c.size() == 3);
  int real = 0;
  for (const auto& b : c) real += b.is_real() ? 1 : 0;
  CHECK(real == 1);
  auto t = isolate_roots(P("x^3-3*x-1"));
  REQUIRE(t.size() == 3);
  for (const auto& b : t) CHECK(b.is_real());
  for (const auto& b : isolate_roots(P("5*x^6-6*x^3+5"))) {
    CHECK_FALSE(b.is_real());
    CHECK(count_roots_in_box(P("5*x^6-6*x^3+5"), b) == 1);
  }
}

TEST_CASE("property: isolate_roots finds every distinct root") {
  std::mt19937 rng(15);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int i = 0; i < 60; ++i) {
    Poly p = random_poly(rng, deg(rng), 10);
    auto boxes = isolate_roots(p);
    CHECK(static_cast<int>(boxes.size()) == squarefree_part(p).degree());
    for (std::size_t a = 0; a < boxes.size(); ++a) {
      for (std::size_t b = a + 1; b < boxes.size(); ++b) {
        bool apart = boxes[a].re.hi < boxes[b].re.lo || boxes[b].re.hi < boxes[a].re.lo ||
                     boxes[a].im.hi < boxes[b].im.lo || boxes[b].im.hi < boxes[a].im.lo ||
                     (boxes[a].is_real() && boxes[b].is_real());
        CHECK(apart);
      }
    }
  }
}
