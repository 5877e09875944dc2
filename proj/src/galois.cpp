#include "trigfield/galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "trigfield/factor.hpp"

namespace trigfield {

namespace {

// Polynomial over Q(theta): coefficients are polynomials in theta reduced
// modulo the generator's minimal polynomial, lowest degree first.
using KPoly = std::vector<Poly>;

class Field {
 public:
  explicit Field(Poly m) : m_(std::move(m)) {}

  const Poly& modulus() const { return m_; }
  int degree() const { return m_.degree(); }

  Poly reduce(const Poly& a) const { return a % m_; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % m_; }
  Poly inv(const Poly& a) const {
    if (a.is_zero()) throw computation_error("inverse of zero in a number field");
    if (a.degree() == 0) return Poly::constant(1 / a.coeff(0));
    auto eg = extended_gcd(a, m_);
    if (eg.g.degree() != 0) throw computation_error("number field modulus is not irreducible");
    return reduce(eg.s);
  }
  Poly generator() const { return reduce(Poly::x()); }

  // q(e) for a rational polynomial q and field element e.
  Poly compose(const Poly& q, const Poly& e) const {
    Poly acc;
    for (int i = q.degree(); i >= 0; --i) acc = mul(acc, e) + Poly::constant(q.coeff(i));
    return acc;
  }

  static void trim(KPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  static int deg(const KPoly& a) { return static_cast<int>(a.size()) - 1; }

  KPoly add(KPoly a, const KPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    trim(a);
    return a;
  }
  KPoly scale(const KPoly& a, const Poly& s) const {
    KPoly out;
    for (const auto& c : a) out.push_back(mul(c, s));
    trim(out);
    return out;
  }
  KPoly mul(const KPoly& a, const KPoly& b) const {
    if (a.empty() || b.empty()) return {};
    KPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    for (auto& c : out) c = reduce(c);
    trim(out);
    return out;
  }
  std::pair<KPoly, KPoly> divmod(KPoly a, const KPoly& b) const {
    if (b.empty()) throw usage_error("division by the zero polynomial");
    const int db = deg(b);
    if (deg(a) < db) return {{}, a};
    KPoly q(static_cast<std::size_t>(deg(a) - db) + 1);
    Poly inv_lead = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      Poly f = mul(a[static_cast<std::size_t>(i)], inv_lead);
      if (f.is_zero()) continue;
      for (int j = 0; j <= db; ++j) {
        auto& t = a[static_cast<std::size_t>(i - db + j)];
        t = reduce(t - f * b[static_cast<std::size_t>(j)]);
      }
      q[static_cast<std::size_t>(i - db)] = f;
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    trim(q);
    return {q, a};
  }
  KPoly monic(const KPoly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }
  KPoly gcd(KPoly a, KPoly b) const {
    while (!b.empty()) {
      KPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  KPoly lift(const Poly& p) const {
    KPoly out;
    for (const auto& c : p.coefficients()) out.push_back(Poly::constant(c));
    trim(out);
    return out;
  }
  // p(x + e) for a rational polynomial p.
  KPoly shift(const Poly& p, const Poly& e) const {
    KPoly lin{e, Poly::constant(Rational(1))};
    trim(lin);
    KPoly acc;
    for (int i = p.degree(); i >= 0; --i) acc = add(mul(acc, lin), KPoly{Poly::constant(p.coeff(i))});
    return acc;
  }

  // Res_y(m(y), g(x - s*y)) as a polynomial over Q, for monic g.
  Poly norm(const KPoly& g, const Rational& s) const {
    const int n = deg(g) * degree();
    std::vector<Rational> nodes, values;
    const Poly y = Poly::x();
    for (int t = 0; t <= n; ++t) {
      Poly lin = Poly::constant(Rational(t)) - y * Poly::constant(s);
      Poly acc;
      for (int i = deg(g); i >= 0; --i) acc = reduce(acc * lin + g[static_cast<std::size_t>(i)]);
      nodes.emplace_back(t);
      values.push_back(acc.is_zero() ? Rational(0) : resultant(m_, acc));
    }
    return interpolate(nodes, values);
  }

  // Monic irreducible factors over this field of a monic squarefree g.
  std::vector<KPoly> factor(const KPoly& g) const {
    std::vector<KPoly> out;
    if (deg(g) <= 1) {
      if (deg(g) == 1) out.push_back(g);
      return out;
    }
    if (degree() == 1) {
      std::vector<Rational> c;
      for (const auto& e : g) c.push_back(e.coeff(0));
      for (const auto& f : irreducible_factors(Poly(c))) out.push_back(lift(f.monic()));
      return out;
    }
    for (int step = 0;; ++step) {
      Rational s(step % 2 == 0 ? step / 2 : -(step + 1) / 2);
      Poly n = norm(g, s);
      if (trigfield::gcd(n, n.derivative()).degree() != 0) continue;
      Poly theta_s = mul(generator(), Poly::constant(s));
      for (const auto& f : irreducible_factors(n)) {
        KPoly h = gcd(g, shift(f.monic(), theta_s));
        if (deg(h) >= 1) out.push_back(h);
      }
      int total = 0;
      for (const auto& f : out) total += deg(f);
      if (total != deg(g)) throw computation_error("norm factorization lost factors");
      return out;
    }
  }

 private:
  Poly m_;
};

// Solves sum_j x_j * columns[j] = rhs for a nonsingular square system.
std::vector<Rational> solve_linear(const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& rhs) {
  const std::size_t n = rhs.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
    a[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw computation_error("singular primitive element system");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j <= n; ++j) a[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

struct Adjunction {
  Poly minpoly;
  Poly old_generator;  // old theta as a polynomial in the new generator
  Poly gamma;
  int k = 1;
};

// Adjoins a root gamma of the monic irreducible h over F with generator
// theta + k*gamma.
Adjunction adjoin(const Field& f, const KPoly& h) {
  const int e = Field::deg(h);
  const Poly theta = f.generator();
  for (int k = 1;; ++k) {
    // htilde(x) = k^e h((x - theta)/k): monic, roots theta + k*gamma.
    KPoly lin{Poly() - theta, Poly::constant(Rational(1))};
    Field::trim(lin);
    KPoly ht;
    Rational kpow(1);
    std::vector<Rational> kp(static_cast<std::size_t>(e) + 1);
    for (int i = e; i >= 0; --i) {
      kp[static_cast<std::size_t>(i)] = kpow;
      kpow *= k;
    }
    for (int i = e; i >= 0; --i) {
      Poly c = h[static_cast<std::size_t>(i)] * Poly::constant(kp[static_cast<std::size_t>(i)]);
      ht = f.add(f.mul(ht, lin), KPoly{f.reduce(c)});
    }
    Poly n = f.norm(ht, Rational(0));
    if (gcd(n, n.derivative()).degree() != 0) continue;
    Field l(n);
    // Powers of theta' = theta + k*gamma in the tower basis theta^a gamma^b;
    // solving for the basis vector of theta expresses it in theta'.
    const int d = f.degree();
    const int dim = d * e;
    KPoly tprime{theta, Poly::constant(Rational(k))};
    Field::trim(tprime);
    auto coords = [&](const KPoly& v) {
      std::vector<Rational> out(static_cast<std::size_t>(dim));
      for (std::size_t b = 0; b < v.size(); ++b) {
        for (int a = 0; a < d; ++a) out[b * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)] = v[b].coeff(a);
      }
      return out;
    };
    std::vector<std::vector<Rational>> columns;
    KPoly power{Poly::constant(Rational(1))};
    for (int j = 0; j < dim; ++j) {
      columns.push_back(coords(power));
      power = f.divmod(f.mul(power, tprime), h).second;
    }
    std::vector<Rational> rhs = coords(KPoly{theta});
    std::vector<Rational> c = solve_linear(columns, rhs);
    Poly old_theta(c);
    if (!l.compose(f.modulus(), old_theta).is_zero()) throw computation_error("primitive element did not separate the generators");
    Poly gamma = l.mul(l.generator() - old_theta, Poly::constant(Rational(1, k)));
    return {n, old_theta, gamma, k};
  }
}

Complex eval_at(const Poly& q, const Complex& z) {
  Complex acc;
  for (int i = q.degree(); i >= 0; --i) {
    acc = acc * z;
    acc.re += Real(q.coeff(i));
  }
  return acc;
}

bool numeric_less(const Complex& a, const Complex& b) {
  Real eps = ldexp(Real(1), -(working_precision() / 2));
  if (abs(a.re - b.re) > eps) return a.re < b.re;
  return a.im < b.im;
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  // (a o b)(i) = a(b(i))
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

}  // namespace

SplittingField splitting_field(const Poly& p) {
  if (p.degree() < 1) throw usage_error("splitting field of a constant polynomial");
  if (p.degree() > kGaloisInputDegreeCap) {
    throw cap_error("galois input degree " + std::to_string(p.degree()) + " exceeds the cap of " +
                    std::to_string(kGaloisInputDegreeCap));
  }
  if (gcd(p, p.derivative()).degree() != 0) throw usage_error("splitting field input must be squarefree");
  const Poly monic = p.monic();
  const int n = monic.degree();

  Field field(Poly::x());
  std::vector<Poly> roots;
  std::vector<std::pair<int, int>> combo;
  std::vector<TowerStep> tower;
  while (true) {
    KPoly rest = field.lift(monic);
    for (const auto& r : roots) {
      KPoly lin{field.reduce(Poly() - r), Poly::constant(Rational(1))};
      auto [q, rem] = field.divmod(rest, lin);
      if (!rem.empty()) throw computation_error("tracked root does not divide the input");
      rest = q;
    }
    if (Field::deg(rest) <= 0) break;
    std::vector<KPoly> factors = field.factor(field.monic(rest));
    std::sort(factors.begin(), factors.end(),
              [](const KPoly& a, const KPoly& b) { return a.size() < b.size(); });
    const KPoly* nonlinear = nullptr;
    for (const auto& f : factors) {
      if (Field::deg(f) == 1) {
        roots.push_back(field.reduce(Poly() - f[0]));
      } else if (nonlinear == nullptr) {
        nonlinear = &f;
      }
    }
    if (nonlinear == nullptr) break;
    const int d = field.degree();
    const int e = Field::deg(*nonlinear);
    if (d * e > kSplittingDegreeCap) {
      throw cap_error("splitting field degree exceeds the cap of " + std::to_string(kSplittingDegreeCap) +
                      " (reached " + std::to_string(d * e) + " at an adjunction)");
    }
    Adjunction adj = adjoin(field, *nonlinear);
    Field next(adj.minpoly);
    for (auto& r : roots) r = next.compose(r, adj.old_generator);
    roots.push_back(adj.gamma);
    combo.emplace_back(static_cast<int>(roots.size()) - 1, adj.k);
    tower.push_back({d, e, adj.k, next.degree()});
    field = next;
  }
  if (static_cast<int>(roots.size()) != n) throw computation_error("splitting field is missing roots");

  // Embedding: a deterministic root of the generator polynomial.
  const Poly& m = field.modulus();
  AlgebraicNumber theta = AlgebraicNumber::from_rational(m.degree() == 1 ? -m.coeff(0) : Rational(0));
  if (m.degree() > 1) {
    PrecisionScope scope(256);
    std::vector<Complex> approx = aberth_roots(m);
    auto best = std::min_element(approx.begin(), approx.end(), [](const Complex& a, const Complex& b) {
      // Largest imaginary part first, then smallest real part.
      Real eps = ldexp(Real(1), -100);
      if (abs(a.im - b.im) > eps) return a.im > b.im;
      return a.re < b.re;
    });
    theta = AlgebraicNumber::root_of(m, *best);
  }

  SplittingField sf;
  sf.input = monic;
  sf.field = {m, theta.box(), m.degree(), theta};
  sf.tower = tower;

  // Order roots by value.
  std::vector<Complex> values;
  {
    PrecisionScope scope(256);
    Complex t = theta.approx(256);
    for (const auto& r : roots) values.push_back(eval_at(r, t));
    std::vector<int> order(roots.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return numeric_less(values[static_cast<std::size_t>(a)], values[static_cast<std::size_t>(b)]);
    });
    std::vector<int> position(roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      sf.roots_in_field.push_back(roots[static_cast<std::size_t>(order[i])]);
      position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    for (const auto& [idx, k] : combo) sf.generator_combination.emplace_back(position[static_cast<std::size_t>(idx)], k);
  }
  return sf;
}

Complex evaluate_in_field(const SplittingField& sf, const Poly& q, int bits) {
  PrecisionScope scope(bits + 32);
  return eval_at(q, sf.field.generator.approx(bits + 16));
}

std::vector<Complex> root_values(const SplittingField& sf, int bits) {
  PrecisionScope scope(bits + 32);
  Complex t = sf.field.generator.approx(bits + 16);
  std::vector<Complex> out;
  for (const auto& r : sf.roots_in_field) out.push_back(eval_at(r, t));
  return out;
}

GaloisGroup galois_group(const SplittingField& sf) {
  const Field field(sf.field.generator_minpoly);
  const int n = static_cast<int>(sf.roots_in_field.size());
  const int d = field.degree();
  PrecisionScope scope(320);
  std::vector<Complex> rho = root_values(sf, 288);
  std::vector<Complex> conjugates{sf.field.generator.approx(288)};
  if (d > 1) conjugates = aberth_roots(field.modulus());

  // The field is normal, so every conjugate of theta is the image of theta
  // under exactly one automorphism. Its action on the roots is read off
  // numerically and must be unambiguous.
  const Real close = ldexp(Real(1), -200);
  const Real apart = ldexp(Real(1), -40);
  std::map<std::vector<int>, Poly> found;
  for (const auto& t : conjugates) {
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
      Complex v = eval_at(sf.roots_in_field[static_cast<std::size_t>(j)], t);
      int hits = 0;
      for (int l = 0; l < n; ++l) {
        Real dist = abs(v - rho[static_cast<std::size_t>(l)]);
        Real scale = max(Real(1), abs(v));
        if (dist < close * scale) {
          perm[static_cast<std::size_t>(j)] = l;
          ++hits;
        } else if (!(dist > apart * scale)) {
          throw computation_error("root images are not numerically separated");
        }
      }
      if (hits != 1) throw computation_error("automorphism does not permute the roots");
    }
    Poly image = d > 1 ? Poly() : Poly::x();
    for (const auto& [idx, k] : sf.generator_combination) {
      image = image + sf.roots_in_field[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx)])] *
                          Poly::constant(Rational(k));
    }
    image = field.reduce(image);
    if (!found.emplace(perm, image).second) throw computation_error("two conjugates induce the same permutation");
  }
  if (static_cast<int>(found.size()) != d) {
    throw computation_error("found " + std::to_string(found.size()) + " automorphisms for a field of degree " +
                            std::to_string(d));
  }
  GaloisGroup g;
  for (const auto& [perm, image] : found) {
    g.permutations.push_back(perm);
    g.images.push_back(image);
  }
  g.order = static_cast<long>(g.permutations.size());
  g.abelian = is_abelian(g);

  // Exact checks: closure under composition, and each generator's image of
  // theta is a root of the generator polynomial that maps roots to roots.
  std::set<std::vector<int>> members(g.permutations.begin(), g.permutations.end());
  for (const auto& a : g.permutations) {
    for (const auto& b : g.permutations) {
      if (members.count(compose_perm(a, b)) == 0) throw computation_error("automorphism set is not closed");
    }
  }
  if (d > 1) {
    for (const auto& gen : generators(g)) {
      const Poly& image = found.at(gen);
      std::vector<Poly> powers{Poly::constant(Rational(1))};
      for (int i = 1; i <= d; ++i) powers.push_back(field.mul(powers.back(), image));
      auto apply = [&](const Poly& q) {
        Poly acc;
        for (int i = 0; i <= q.degree(); ++i) {
          if (q.coeff(i) != 0) acc += powers[static_cast<std::size_t>(i)] * Poly::constant(q.coeff(i));
        }
        return field.reduce(acc);
      };
      if (!apply(field.modulus()).is_zero()) throw computation_error("generator image is not a conjugate");
      for (int j = 0; j < n; ++j) {
        Poly img = apply(sf.roots_in_field[static_cast<std::size_t>(j)]);
        if (img != sf.roots_in_field[static_cast<std::size_t>(gen[static_cast<std::size_t>(j)])]) {
          throw computation_error("generator does not act on the roots as computed");
        }
      }
    }
  }
  return g;
}

bool is_abelian(const GaloisGroup& g) {
  for (std::size_t i = 0; i < g.permutations.size(); ++i) {
    for (std::size_t j = i + 1; j < g.permutations.size(); ++j) {
      if (compose_perm(g.permutations[i], g.permutations[j]) != compose_perm(g.permutations[j], g.permutations[i])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> generators(const GaloisGroup& g) {
  std::vector<std::vector<int>> gens;
  if (g.permutations.empty()) return gens;
  std::set<std::vector<int>> span{g.permutations.front()};
  for (const auto& p : g.permutations) {
    if (span.count(p) != 0) continue;
    gens.push_back(p);
    std::vector<std::vector<int>> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& a : frontier) {
        for (const auto& s : gens) {
          auto c = compose_perm(s, a);
          if (span.insert(c).second) next.push_back(c);
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

DivisibilityReport check_divisibility_laws(const Poly& p, const SplittingField& sf, const GaloisGroup& g) {
  DivisibilityReport r;
  r.n = p.degree();
  r.order = g.order;
  auto add = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
    if (!pass) r.pass = false;
  };
  const auto order = static_cast<unsigned long long>(g.order);
  add("n | order", order % static_cast<unsigned long long>(r.n) == 0,
      std::to_string(r.n) + " | " + std::to_string(g.order));
  add("order | n!", factorial(r.n) % order == 0, std::to_string(g.order) + " | " + std::to_string(factorial(r.n)));
  bool tower_ok = true;
  std::string detail;
  int degree = 1;
  for (const auto& step : sf.tower) {
    bool ok = step.base_degree == degree && step.degree == step.base_degree * step.step_degree;
    tower_ok = tower_ok && ok;
    if (!detail.empty()) detail += ", ";
    detail += std::to_string(step.base_degree) + "*" + std::to_string(step.step_degree) + "=" +
              std::to_string(step.degree);
    degree = step.degree;
  }
  tower_ok = tower_ok && degree == sf.field.degree && degree == g.order;
  add("tower multiplicativity", tower_ok, detail.empty() ? "trivial tower" : detail);
  return r;
}

GaloisReport galois_report(const Poly& p) {
  GaloisReport r;
  r.field = splitting_field(p);
  r.group = galois_group(r.field);
  Poly sq = primitive_part(p);
  r.laws = check_divisibility_laws(sq, r.field, r.group);
  return r;
}

namespace {

std::string generator_list(const GaloisGroup& g) {
  std::string out;
  for (const auto& gen : generators(g)) {
    if (!out.empty()) out += " ";
    out += cycle_notation(gen);
  }
  return out.empty() ? "()" : out;
}

}  // namespace

std::string render_galois_text(const GaloisReport& r) {
  std::ostringstream out;
  out << "polynomial: " << to_string(primitive_part(r.field.input)) << "\n";
  out << "splitting field degree: " << r.field.field.degree << "\n";
  out << "generator minpoly: " << to_string(r.field.field.generator_minpoly) << "\n";
  out << "group order: " << r.group.order << "\n";
  out << "abelian: " << (r.group.abelian ? "yes" : "no") << "\n";
  out << "generators: " << generator_list(r.group) << "\n";
  std::vector<Complex> values = root_values(r.field, 128);
  // Real roots come back with a noise-level imaginary part.
  for (auto& v : values) {
    if (abs(v.im) < precision_tolerance(128)) v.im = Real(0);
  }
  for (std::size_t i = 0; i < values.size(); ++i) out << "root " << i + 1 << ": " << to_string(values[i], 20) << "\n";
  for (const auto& c : r.laws.checks) {
    out << "law " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
  }
  return out.str();
}

std::string render_galois_record(const GaloisReport& r) {
  std::ostringstream out;
  out << "polynomial,splitting_degree,order,abelian,generators\n";
  out << to_string(primitive_part(r.field.input)) << "," << r.field.field.degree << "," << r.group.order << ","
      << (r.group.abelian ? "true" : "false") << "," << generator_list(r.group) << "\n";
  return out.str();
}

}  // namespace trigfield
