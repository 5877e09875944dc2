// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden_suite.hpp"
#include "lll_oracle.hpp"
#include "trigfield/classifier.hpp"
#include "trigfield/construct.hpp"
#include "trigfield/factor.hpp"
#include "trigfield/galois.hpp"
#include "trigfield/minpoly.hpp"
#include "trigfield/poly_parse.hpp"
#include "trigfield/transcendental.hpp"

using namespace trigfield;

namespace {

const std::string kCli = TRIGFIELD_CLI;
const std::string kSource = TRIGFIELD_SOURCE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int id, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0) o.require(secs < limit_seconds, "took longer than the time limit");
  if (!o.pass) ++failures;
  char t[32];
  std::snprintf(t, sizeof t, "%.2fs", secs);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << t << ")"
            << (o.detail.empty() ? "" : " " + o.detail) << std::endl;
}

golden::Run cli(const std::string& args) { return golden::run_cli(kCli, kSource, args, 1); }

std::string read(const std::string& rel) {
  std::string s;
  golden::read_file(kSource + "/" + rel, s);
  return s;
}

// Real root of f in [lo, hi] by plain bisection on sign changes.
Real bisect(const std::function<Real(const Real&)>& f, Real lo, Real hi) {
  Real flo = f(lo);
  for (int i = 0; i < 300; ++i) {
    Real mid = (lo + hi) / Real(2);
    Real fm = f(mid);
    if ((fm < Real(0)) == (flo < Real(0))) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / Real(2);
}

}  // namespace

int main() {
  criterion(1, 1.0, [](Outcome& o) {
    auto r = cli("minpoly unit-radical 3 4 3");
    o.require(r.exit_code == 0, "nonzero exit");
    o.require(r.out == "5*x^6 - 6*x^3 + 5\n", "got " + r.out);
  });

  criterion(2, 10.0, [](Outcome& o) {
    const std::vector<std::string> table = {
        "x^3 - 3*x - 2*c",
        "x^4 - 4*x^2 - 2*c + 2",
        "x^5 - 5*x^3 + 5*x - 2*c",
        "x^6 - 6*x^4 + 9*x^2 - 2*c - 2",
        "x^7 - 7*x^5 + 14*x^3 - 7*x - 2*c",
        "x^8 - 8*x^6 + 20*x^4 - 16*x^2 - 2*c + 2",
        "x^9 - 9*x^7 + 27*x^5 - 30*x^3 + 9*x - 2*c",
        "x^10 - 10*x^8 + 35*x^6 - 50*x^4 + 25*x^2 - 2*c - 2",
        "x^11 - 11*x^9 + 44*x^7 - 77*x^5 + 55*x^3 - 11*x - 2*c",
    };
    auto r = cli("partition-polys 11");
    o.require(r.exit_code == 0, "nonzero exit");
    std::istringstream in(r.out);
    std::string line;
    for (const auto& row : table) {
      std::getline(in, line);
      o.require(line == row, "row mismatch: " + line);
    }
  });

  criterion(3, 30.0, [](Outcome& o) {
    PatternAudit a = audit_s_patterns(40);
    for (const auto& p : a.patterns) {
      if (p.name == "S_odd" || p.name == "S_0" || p.name == "S_2") o.require(p.pass, p.name + " failed");
      if (p.name == "S_4") {
        o.require(!p.pass, "S_4 passed");
        o.require(p.first_k == 5, "S_4 first counterexample is not k = 5");
        o.require(p.actual == 5 && p.expected == 6, "S_4 counterexample values differ from 5 vs 6");
      }
    }
    o.require(a.dickson_pass, "Dickson closed form failed");
    o.require(a.closed_form_pass, "binomial closed form failed");
    o.require(audit_s_patterns(40).rows == a.rows, "audit not deterministic");
  });

  criterion(4, 180.0, [](Outcome& o) {
    auto t = [](const char* text) {
      auto t0 = std::chrono::steady_clock::now();
      auto r = galois_report(parse_poly(text));
      return std::make_pair(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    };
    auto [q, tq] = t("x^2 - 5");
    o.require(q.group.order == 2 && q.group.abelian, "x^2 - 5 is not order 2 abelian");
    auto [c, tc] = t("x^3 - 2");
    o.require(c.group.order == 6 && !c.group.abelian, "x^3 - 2 is not order 6 nonabelian");
    std::set<std::vector<int>> perms(c.group.permutations.begin(), c.group.permutations.end());
    std::vector<int> p{0, 1, 2};
    std::set<std::vector<int>> s3;
    do s3.insert(p);
    while (std::next_permutation(p.begin(), p.end()));
    o.require(perms == s3, "x^3 - 2 does not act as S3");
    auto [s, ts] = t("5*x^6 - 6*x^3 + 5");
    o.require(!s.group.abelian, "sextic is abelian");
    PrecisionScope scope(256);
    std::vector<Complex> roots = aberth_roots(parse_poly("5*x^6 - 6*x^3 + 5"));
    const int count = oracle::automorphism_count(roots);
    o.require(count == s.group.order,
              "oracle count " + std::to_string(count) + " vs order " + std::to_string(s.group.order));
    o.require(tq < 60 && tc < 60 && ts < 60, "a single galois query exceeded 60 s");
  });

  criterion(5, 0, [](Outcome& o) {
    std::mt19937 rng(20240);
    std::uniform_int_distribution<int> deg(2, 4);
    std::uniform_int_distribution<int> coef(-9, 9);
    int done = 0;
    while (done < 30) {
      const int n = deg(rng);
      std::vector<Rational> cs(static_cast<std::size_t>(n) + 1);
      for (auto& v : cs) v = coef(rng);
      cs.back() = 1;
      Poly f(cs);
      if (!is_irreducible(f)) continue;
      ++done;
      auto r = galois_report(f);
      const int order = r.group.order;
      long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      o.require(order % n == 0 && fact % order == 0, "divisibility fails for " + to_string(f));
      for (const auto& c : r.laws.checks) o.require(c.pass, c.name + " fails for " + to_string(f));
    }
  });

  criterion(6, 0, [](Outcome& o) {
    auto r = cli("report-doubling-cube --format records");
    o.require(r.exit_code == 0, "nonzero exit");
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    o.require(line == "field,status,rule,detail", "bad header");
    const std::vector<std::string> prefix = {"C,OUT,", "O,IN,", "P,OUT,P-MIXED-ROOTS,", "T1,UNKNOWN,"};
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    o.require(rows.size() == 4, "expected 4 rows");
    for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
      o.require(rows[i].rfind(prefix[i], 0) == 0, "row " + rows[i]);
    }
    if (rows.size() == 4) o.require(rows[3].find("CONJ-T1-DOUBLING-CUBE") != std::string::npos, "no conjecture citation");
    auto text = cli("report-doubling-cube");
    o.require(text.out == read("tests/golden/doubling_cube.out"), "text table differs from the frozen table");
  });

  criterion(7, 60.0, [](Outcome& o) {
    PrecisionScope scope(256);
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 9);
    int done = 0;
    while (done < 100) {
      Rational p(num(rng), den(rng)), q(num(rng), den(rng));
      p.canonicalize();
      q.canonicalize();
      if (p >= 0 || -27 * q * q / (4 * p * p * p) >= 1) continue;
      ++done;
      auto trig = solve_cubic_trig(p, q);
      std::sort(trig.begin(), trig.end(), [](const Real& a, const Real& b) { return a < b; });
      Poly f{q, p, Rational(0), Rational(1)};
      auto boxes = isolate_roots(f);
      o.require(boxes.size() == 3 && trig.size() == 3, "root count mismatch");
      for (std::size_t i = 0; i < 3 && i < boxes.size(); ++i) {
        RealInterval iv = refine_real_root(squarefree_part(f), boxes[i].re, Rational(1, 1) / Rational(mpz_class(1) << 100));
        o.require(abs(trig[i] - Real(iv.midpoint())) < Real(1e-20), "disagreement for " + to_string(f));
      }
    }
    bool raised = false;
    try {
      solve_cubic_trig(Rational(0), Rational(-2));
    } catch (const Error&) {
      raised = true;
    }
    o.require(raised, "x^3 - 2 did not raise the regime error");
  });

  criterion(8, 0, [](Outcome& o) {
    PrecisionScope scope(256);
    Workspace pi7 = run_script(parse_script(read("geo/pi7.geo")));
    const Complex z = pi7.at("PI7").a;
    Real err = abs(z - Complex(Real::pi() / Real(7), Real(0)));
    o.require(err < ldexp(Real::pi(), -200), "pi/7 error too large");
    o.require(to_string(pi7.provenance.at("PI7")) == "euclidean;T1;T2", "pi7 provenance " + to_string(pi7.provenance.at("PI7")));

    Workspace cube = run_script(parse_script(read("geo/cube_root.geo")));
    const Complex x = cube.at("X").a;
    Real cbrt2 = exp(log(Real(2)) / Real(3));
    o.require(abs(x.re) < Real(1e-30) && abs(x.im - cbrt2) < Real(1e-30), "cube root error too large");
    o.require(to_string(cube.provenance.at("X")) == "euclidean;origami", "cube provenance " + to_string(cube.provenance.at("X")));
  });

  criterion(9, 120.0, [](Outcome& o) {
    PrecisionScope scope(256);
    const Real tol = Real::parse("1e-30");
    FamilyParams one{Family::kSinLine, Rational(1), Rational(0)};
    o.require(count_zeros(one, make_rect(-1, 1, -1, 1)) == 3, "sin z - z does not count 3 zeros");

    FamilyParams half{Family::kSinLine, Rational(1, 2), Rational(0)};
    std::vector<Real> real_roots;
    for (const auto& r : find_roots(half, make_rect(-10, 10, -10, 10), tol)) {
      if (r.z.im == Real(0)) real_roots.push_back(r.z.re);
    }
    auto g = [](const Real& x) { return sin(x) - x / Real(2); };
    Real pos = bisect(g, Real(1), Real(3));
    const std::vector<Real> expected = {-pos, Real(0), pos};
    o.require(real_roots.size() == 3, "expected 3 real roots, got " + std::to_string(real_roots.size()));
    for (std::size_t i = 0; i < real_roots.size() && i < 3; ++i) {
      o.require(abs(real_roots[i] - expected[i]) < Real(1e-10), "real root disagrees with bisection");
    }
    o.require(abs(pos - Real::parse("1.8954942670")) < Real(1e-10), "bisection oracle drifted");

    auto tangency = tangency_locus(2);
    const double a2 = tangency.at(1).a.to_double();
    o.require(std::round(a2 * 1000) == std::round(0.1283 * 1000), "a_2 = " + std::to_string(a2));

    FamilyParams cot{Family::kCotLine, Rational(1, 5), Rational(3)};
    auto cot_roots = find_roots(cot, make_rect(Rational(1, 10), 20, -5, 5), tol);
    o.require(!cot_roots.empty(), "no cot roots");
    for (const auto& r : cot_roots) o.require(abs(r.z.im) < Real(1e-15), "cot root off the real line");
  });

  criterion(10, 0, [](Outcome& o) {
    auto commands = golden::load_manifest(kSource + "/tests/golden/commands.txt");
    o.require(!commands.empty(), "empty manifest");
    for (const auto& c : commands) {
      std::string expected;
      o.require(golden::read_file(kSource + "/tests/golden/" + c.name + ".out", expected), "missing golden " + c.name);
      std::string first;
      for (int threads : {1, 4, 8}) {
        auto r = golden::run_cli(kCli, kSource, c.args, threads);
        o.require(r.exit_code == c.exit_code, c.name + " exit " + std::to_string(r.exit_code));
        o.require(golden::matches(expected, r.out), c.name + " differs from golden at " + std::to_string(threads) + " threads");
        if (threads == 1) {
          first = r.out;
        } else {
          o.require(r.out == first, c.name + " not byte-identical at " + std::to_string(threads) + " threads");
        }
      }
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
