#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "trigfield/classifier.hpp"
#include "trigfield/factor.hpp"
#include "trigfield/poly_parse.hpp"

using namespace trigfield;

namespace {

Poly P(const char* text) { return parse_poly(text); }

std::string status_of(const Verdict& v) { return to_string(v.status); }

bool registered(const Verdict& v) {
  for (const auto& r : rule_registry()) {
    if (v.rule == r.id) return r.field == v.field && r.status == v.status;
  }
  return false;
}

}  // namespace

TEST_CASE("classify_constructible") {
  CHECK(status_of(classify_constructible(P("x^2-2"))) == "IN");
  CHECK(status_of(classify_constructible(P("x^3-2"))) == "OUT");
  auto v = classify_constructible(P("x^4+1"));
  CHECK(status_of(v) == "IN");
  CHECK(v.rule == "C-POW2-SPLIT");
  CHECK_THROWS_AS(classify_constructible(P("x^2-1")), Error);
}

TEST_CASE("classify_origami") {
  CHECK(status_of(classify_origami(P("x^3-2"))) == "IN");
  auto v = classify_origami(P("x^5-2"));
  CHECK(status_of(v) == "OUT");
  CHECK(v.rule == "O-OTHER-PRIME-SPLIT");
  CHECK(status_of(classify_origami(P("x^2+1"))) == "IN");
}

TEST_CASE("classify_partition") {
  auto a = classify_partition(P("x^3-2"));
  CHECK(status_of(a) == "OUT");
  CHECK(a.rule == "P-MIXED-ROOTS");
  auto b = classify_partition(P("x^3-3*x-1"));
  CHECK(status_of(b) == "IN");
  CHECK(b.rule == "P-CUBIC-ALL-REAL");
  CHECK(status_of(classify_partition(P("x^5-2"))) == "OUT");
  auto c = classify_partition(P("3*x^5-15*x^3+15*x-2"));
  CHECK(status_of(c) == "IN");
  CHECK(c.rule == "P-SUM-CONJ-FAMILY");
  CHECK(status_of(classify_partition(P("x^4+1"))) == "UNKNOWN");
}

TEST_CASE("classify_T1") {
  auto a = classify_T1(P("x^3-3*x-1"));
  CHECK(status_of(a) == "IN");
  CHECK(a.rule == "T1-ABELIAN");
  auto b = classify_T1(P("5*x^6-6*x^3+5"));
  CHECK(status_of(b) == "IN");
  CHECK(b.rule == "T1-UNIT-FAMILY");
  CHECK(b.detail.find("c = -3/5, n = 3") != std::string::npos);
  auto c = classify_T1(P("x^3-2"));
  CHECK(status_of(c) == "UNKNOWN");
  CHECK(c.rule == "T1-NO-RULE");
  CHECK(c.detail.find(kConjectureDoublingCube) != std::string::npos);
}

TEST_CASE("unit family matching") {
  auto m = match_unit_family(P("5*x^6-6*x^3+5"));
  REQUIRE(m);
  CHECK(m->n == 3);
  CHECK(m->c == Rational(-3, 5));
  CHECK_FALSE(match_unit_family(P("x^6-3*x^3+1")));
  CHECK_FALSE(match_unit_family(P("x^6-x^3+2")));
  auto s = match_sum_conj_family(P("x^3-3*x-1"));
  REQUIRE(s);
  CHECK(s->c == Rational(1, 2));
}

TEST_CASE("solve_cubic_trig") {
  PrecisionScope scope(256);
  auto r = solve_cubic_trig(Rational(-3), Rational(1));
  std::vector<double> v;
  for (const auto& x : r) v.push_back(x.to_double());
  std::sort(v.begin(), v.end());
  CHECK(v[0] == doctest::Approx(-1.8793852).epsilon(1e-7));
  CHECK(v[1] == doctest::Approx(0.3472964).epsilon(1e-7));
  CHECK(v[2] == doctest::Approx(1.5320889).epsilon(1e-7));
  for (const auto& x : r) CHECK(abs(x * x * x - Real(3) * x + Real(1)) < Real(1e-30));
  // q = -1 is the mirror image: x^3 - 3x - 1.
  auto m = solve_cubic_trig(Rational(-3), Rational(-1));
  std::vector<double> u;
  for (const auto& x : m) u.push_back(x.to_double());
  std::sort(u.begin(), u.end());
  CHECK(u[0] == doctest::Approx(-1.5320889).epsilon(1e-7));
  CHECK(u[1] == doctest::Approx(-0.3472964).epsilon(1e-7));
  CHECK(u[2] == doctest::Approx(1.8793852).epsilon(1e-7));
  auto t = solve_cubic_trig(Rational(-1), Rational(0));
  std::vector<double> w;
  for (const auto& x : t) w.push_back(x.to_double());
  std::sort(w.begin(), w.end());
  CHECK(w[0] == doctest::Approx(-1));
  CHECK(std::abs(w[1]) < 1e-60);
  CHECK(w[2] == doctest::Approx(1));
  CHECK_THROWS_AS(solve_cubic_trig(Rational(0), Rational(-2)), Error);
  CHECK_THROWS_AS(solve_cubic_trig(Rational(-3), Rational(3)), Error);
}

TEST_CASE("doubling_cube_report") {
  auto rows = doubling_cube_report();
  REQUIRE(rows.size() == 4);
  CHECK(to_string(rows[0].field) == "C");
  CHECK(status_of(rows[0]) == "OUT");
  CHECK(status_of(rows[1]) == "IN");
  CHECK(status_of(rows[2]) == "OUT");
  CHECK(rows[2].rule == "P-MIXED-ROOTS");
  CHECK(status_of(rows[3]) == "UNKNOWN");
  std::string records = render_verdicts_records(rows);
  CHECK(records.rfind("field,status,rule,detail\nC,OUT,C-NONPOW2-SPLIT,", 0) == 0);
}

TEST_CASE("property: monotonicity and registered rules on the corpus") {
  const char* corpus[] = {"x^2-2", "x^2+1", "x^3-2", "x^3-3*x-1", "x^4+1", "x^4-2", "x^4+x+1", "x^5-2",
                          "5*x^6-6*x^3+5", "x^4-10*x^2+1", "x^3-x-1", "x^6+x^3+1", "3*x^5-15*x^3+15*x-2",
                          "x^2+x+1", "x^4-4*x^2+2", "x-3", "x^6-2", "x^5-x-1", "x^7-3"};
  for (const char* text : corpus) {
    Poly p = P(text);
    auto vs = classify_all(p);
    for (const auto& v : vs) CHECK_MESSAGE(registered(v), text << " " << v.rule);
    if (vs[0].status == Status::kIn) {
      CHECK(vs[1].status == Status::kIn);
      CHECK(vs[3].status == Status::kIn);
    }
    int real = SturmSequence(p).count_all();
    if (real > 0 && real < p.degree()) CHECK(vs[2].status != Status::kIn);
    if (vs[3].rule == "T1-ABELIAN") {
      auto g = galois_group(splitting_field(p));
      CHECK(is_abelian(g));
    }
  }
}

TEST_CASE("property: solve_cubic_trig matches isolate_roots") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 7);
  PrecisionScope scope(256);
  int done = 0;
  while (done < 100) {
    Rational p(num(rng), den(rng));
    Rational q(num(rng), den(rng));
    p.canonicalize();
    q.canonicalize();
    if (p >= 0 || -27 * q * q / (4 * p * p * p) >= 1) continue;
    ++done;
    auto roots = solve_cubic_trig(p, q);
    std::sort(roots.begin(), roots.end(), [](const Real& a, const Real& b) { return a < b; });
    Poly f{q, p, Rational(0), Rational(1)};
    auto boxes = isolate_roots(f);
    REQUIRE(boxes.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      RealInterval iv = refine_real_root(squarefree_part(f), boxes[i].re, Rational(1, 1) / Rational(mpz_class(1) << 90));
      CHECK(abs(roots[i] - Real(iv.midpoint())) < Real(1e-20));
    }
  }
}
