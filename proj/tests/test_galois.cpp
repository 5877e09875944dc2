#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lll_oracle.hpp"
#include "trigfield/factor.hpp"
#include "trigfield/galois.hpp"
#include "trigfield/poly_parse.hpp"

using namespace trigfield;

namespace {

Poly P(const char* text) { return parse_poly(text); }

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

void check_group_axioms(const GaloisGroup& g, int field_degree) {
  std::set<std::vector<int>> set(g.permutations.begin(), g.permutations.end());
  REQUIRE(set.size() == g.permutations.size());
  CHECK(g.order == field_degree);
  std::vector<int> id(g.permutations.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  CHECK(set.count(id) == 1);
  for (const auto& a : g.permutations) {
    for (const auto& b : g.permutations) CHECK(set.count(compose(a, b)) == 1);
    std::vector<int> inv(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) inv[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    CHECK(set.count(inv) == 1);
  }
}

// Each automorphism, applied numerically through its image of theta, sends
// root j to root perm[j].
void check_numeric_action(const SplittingField& sf, const GaloisGroup& g) {
  PrecisionScope scope(256);
  std::vector<Complex> roots = root_values(sf, 256);
  for (std::size_t a = 0; a < g.permutations.size(); ++a) {
    Complex t = evaluate_in_field(sf, g.images[a], 256);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const Poly& q = sf.roots_in_field[j];
      Complex v;
      for (int i = q.degree(); i >= 0; --i) {
        v = v * t;
        v.re += Real(q.coeff(i));
      }
      CHECK(abs(v - roots[static_cast<std::size_t>(g.permutations[a][j])]) < Real(1e-20));
    }
  }
}

}  // namespace

TEST_CASE("splitting_field examples") {
  auto a = splitting_field(P("x^2-5"));
  CHECK(a.field.degree == 2);
  CHECK(a.field.generator_minpoly == P("x^2-5"));
  REQUIRE(a.roots_in_field.size() == 2);
  std::set<std::string> forms{to_string(a.roots_in_field[0]), to_string(a.roots_in_field[1])};
  CHECK(forms == std::set<std::string>{"x", "-x"});
  CHECK(splitting_field(P("x^3-2")).field.degree == 6);
  CHECK(splitting_field(P("x^3-3*x-1")).field.degree == 3);
  CHECK(splitting_field(P("x-7")).field.degree == 1);
  CHECK(splitting_field(P("(x^2-2)*(x^2-3)")).field.degree == 4);
}

TEST_CASE("splitting field roots reproduce the input roots") {
  for (const char* text : {"x^3-2", "x^4+x+1", "5*x^6-6*x^3+5", "x^4-10*x^2+1"}) {
    Poly p = P(text);
    auto sf = splitting_field(p);
    PrecisionScope scope(256);
    auto values = root_values(sf, 256);
    auto boxes = isolate_roots(p);
    REQUIRE(values.size() == boxes.size());
    for (const auto& v : values) {
      Complex acc;
      for (int i = p.degree(); i >= 0; --i) {
        acc = acc * v;
        acc.re += Real(p.coeff(i));
      }
      CHECK(abs(acc) < Real(1e-30));
    }
    for (const auto& b : boxes) {
      int inside = 0;
      for (const auto& v : values) inside += b.contains(v) ? 1 : 0;
      CHECK(inside == 1);
    }
  }
}

TEST_CASE("galois_group examples") {
  auto g2 = galois_report(P("x^2-5"));
  CHECK(g2.group.order == 2);
  CHECK(g2.group.abelian);

  auto g3 = galois_report(P("x^3-2"));
  CHECK(g3.group.order == 6);
  CHECK_FALSE(g3.group.abelian);
  // Symmetric group on the three roots.
  std::set<std::vector<int>> s3(g3.group.permutations.begin(), g3.group.permutations.end());
  std::vector<int> p{0, 1, 2};
  std::set<std::vector<int>> all;
  do all.insert(p);
  while (std::next_permutation(p.begin(), p.end()));
  CHECK(s3 == all);

  auto c3 = galois_report(P("x^3-3*x-1"));
  CHECK(c3.group.order == 3);
  CHECK(c3.group.abelian);
}

TEST_CASE("nonabelian sextic against the brute-force automorphism count") {
  Poly p = P("5*x^6-6*x^3+5");
  auto r = galois_report(p);
  CHECK_FALSE(r.group.abelian);
  std::vector<Complex> roots;
  {
    PrecisionScope scope(256);
    for (const auto& z : aberth_roots(p)) roots.push_back(z);
  }
  PrecisionScope scope(256);
  const int count = oracle::automorphism_count(roots);
  CHECK(count == r.group.order);
  CHECK(r.group.order == 12);
}

TEST_CASE("oracle agrees on small groups") {
  for (const char* text : {"x^3-2", "x^3-3*x-1", "x^4+1", "x^4-2"}) {
    Poly p = P(text);
    auto r = galois_report(p);
    PrecisionScope scope(256);
    CHECK(oracle::automorphism_count(aberth_roots(p)) == r.group.order);
  }
}

TEST_CASE("is_abelian") {
  CHECK(is_abelian(galois_report(P("x^3-3*x-1")).group));
  CHECK_FALSE(is_abelian(galois_report(P("x^3-2")).group));
  GaloisGroup trivial;
  trivial.permutations = {{0}};
  trivial.order = 1;
  CHECK(is_abelian(trivial));
}

TEST_CASE("cycle notation and generators") {
  CHECK(cycle_notation({0, 1, 2}) == "()");
  CHECK(cycle_notation({1, 2, 0, 4, 3}) == "(1 2 3)(4 5)");
  auto r = galois_report(P("x^3-2"));
  auto gens = generators(r.group);
  CHECK(gens.size() == 2);
  CHECK(render_galois_record(r) == "polynomial,splitting_degree,order,abelian,generators\n"
                                   "x^3 - 2,6,6,false,(2 3) (1 2)\n");
}

TEST_CASE("check_divisibility_laws examples") {
  auto r = galois_report(P("x^3-2"));
  CHECK(r.laws.pass);
  CHECK(r.laws.n == 3);
  CHECK(r.laws.order == 6);
  auto q = galois_report(P("x^2-5"));
  CHECK(q.laws.pass);
  CHECK(q.laws.order == 2);
}

TEST_CASE("caps and preconditions") {
  CHECK_THROWS_AS(splitting_field(P("x^7-2")), Error);
  try {
    splitting_field(P("x^5-x-1"));
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapExceeded);
  }
  try {
    splitting_field(P("(x-1)^2"));
    FAIL("expected a usage error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUsage);
  }
}

TEST_CASE("property: group axioms, numeric action and conjugation closure") {
  for (const char* text : {"x^2-5", "x^3-2", "x^3-3*x-1", "x^4+1", "x^4-2", "x^4+x+1", "5*x^6-6*x^3+5",
                           "x^6+x^3+1", "x^4-4*x^2+2"}) {
    Poly p = P(text);
    auto r = galois_report(p);
    check_group_axioms(r.group, r.field.field.degree);
    check_numeric_action(r.field, r.group);
    // Complex conjugation as a permutation of the roots.
    PrecisionScope scope(256);
    auto values = root_values(r.field, 256);
    std::vector<int> conj_perm(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
      for (std::size_t l = 0; l < values.size(); ++l) {
        if (abs(conj(values[j]) - values[l]) < Real(1e-30)) conj_perm[j] = static_cast<int>(l);
      }
    }
    CHECK(std::count(r.group.permutations.begin(), r.group.permutations.end(), conj_perm) == 1);
  }
}

TEST_CASE("property: x^2n + 2c x^n + 1 family orders") {
  const Rational cs[] = {Rational(1, 2), Rational(-3, 5), Rational(1, 3), Rational(0)};
  for (const auto& c : cs) {
    for (int n = 1; n <= 3; ++n) {
      Poly f = Poly::monomial(Rational(1), 2 * n) + Poly::monomial(2 * c, n) + Poly::constant(Rational(1));
      auto r = galois_report(f);
      long bound = 2L * n * euler_phi(n) * 2;
      CHECK(bound % r.group.order == 0);
    }
  }
}

TEST_CASE("property: cyclotomic groups are abelian") {
  for (int n = 1; n <= 20; ++n) {
    if (euler_phi(n) > kGaloisInputDegreeCap) continue;
    auto r = galois_report(cyclotomic(n));
    CHECK(r.group.abelian);
    CHECK(r.group.order == euler_phi(n));
  }
}

TEST_CASE("property: divisibility laws on random irreducibles") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> deg(2, 4);
  std::uniform_int_distribution<int> coef(-6, 6);
  int done = 0;
  while (done < 30) {
    int n = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    Poly p(c);
    if (!is_irreducible(p)) continue;
    ++done;
    auto r = galois_report(p);
    CHECK(r.laws.pass);
    for (const auto& check : r.laws.checks) CHECK_MESSAGE(check.pass, check.name << " " << to_string(p));
  }
}
