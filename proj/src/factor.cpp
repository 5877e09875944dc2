#include "trigfield/factor.hpp"

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <random>

namespace trigfield {

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly to_zpoly(const Poly& p) {
  ZPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.get_num());
  return out;
}

Poly from_zpoly(const ZPoly& a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& c : a) out.emplace_back(c);
  return Poly(std::move(out));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

void zreduce(ZPoly& a, const Integer& m) {
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  ztrim(a);
}

void zsymmetric(ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
}

// ---- polynomials over F_p, p < 2^31 ---------------------------------------

using FpPoly = std::vector<std::uint64_t>;

class Fp {
 public:
  explicit Fp(std::uint64_t p) : p_(p) {}
  std::uint64_t prime() const { return p_; }

  static void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  std::uint64_t reduce(const Integer& z) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return r.get_ui();
  }

  FpPoly from(const ZPoly& a) const {
    FpPoly out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(reduce(c));
    trim(out);
    return out;
  }

  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e > 0) {
      if (e & 1U) r = r * a % p_;
      a = a * a % p_;
      e >>= 1U;
    }
    return r;
  }

  FpPoly add(const FpPoly& a, const FpPoly& b) const {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p_;
    trim(out);
    return out;
  }

  FpPoly sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p_ - b[i]) % p_;
    trim(out);
    return out;
  }

  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    }
    trim(out);
    return out;
  }

  FpPoly scale(FpPoly a, std::uint64_t s) const {
    for (auto& c : a) c = c * s % p_;
    trim(a);
    return a;
  }

  std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
    if (b.empty()) throw computation_error("modular division by zero");
    if (a.size() < b.size()) return {{}, a};
    FpPoly rem = a;
    FpPoly quot(a.size() - b.size() + 1, 0);
    std::uint64_t li = inv(b.back());
    for (std::size_t i = a.size(); i-- >= b.size();) {
      std::uint64_t top = rem[i];
      if (top == 0) continue;
      std::uint64_t f = top * li % p_;
      std::size_t shift = i - (b.size() - 1);
      quot[shift] = f;
      for (std::size_t j = 0; j < b.size(); ++j) {
        rem[shift + j] = (rem[shift + j] + p_ - f * b[j] % p_) % p_;
      }
    }
    trim(quot);
    trim(rem);
    return {quot, rem};
  }

  FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }

  FpPoly monic(const FpPoly& a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
  }

  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = 1 for coprime a, b.
  std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1;
    FpPoly t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      FpPoly s2 = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      FpPoly t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw computation_error("modular factors are not coprime");
    std::uint64_t li = inv(r0[0]);
    return {scale(s0, li), scale(t0, li)};
  }

  FpPoly derivative(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * (i % p_) % p_;
    trim(out);
    return out;
  }

  FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) const {
    FpPoly result{1};
    base = mod(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = mod(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base), m);
    }
    return result;
  }

 private:
  std::uint64_t p_;
};

// Distinct-degree factorization of a monic squarefree polynomial: pairs
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, int>> distinct_degree(const Fp& F, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly x{0, 1};
  FpPoly h = x;
  Integer p(static_cast<unsigned long>(F.prime()));
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, p, f);
    FpPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(F.monic(f), static_cast<int>(f.size()) - 1);
  return out;
}

void equal_degree(const Fp& F, const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), F.prime(), static_cast<unsigned long>(d));
  Integer e = (pd - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, F.prime() - 1);
  while (true) {
    FpPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    Fp::trim(a);
    if (a.size() <= 1) continue;
    FpPoly b = F.sub(F.powmod(a, e, g), FpPoly{1});
    FpPoly h = F.gcd(b, g);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<bool> sieve(limit + 1, true);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return out;
}

constexpr int kMaxBits = kInternalFactorCap + 1;

// Lifts a monic factorization target = g0*h0 (mod p) to g*h (mod p^k).
std::pair<ZPoly, ZPoly> hensel_pair(const Fp& F, const ZPoly& target, const FpPoly& g0, const FpPoly& h0, int k) {
  auto [s, t] = F.bezout(g0, h0);
  ZPoly G(g0.begin(), g0.end());
  ZPoly H(h0.begin(), h0.end());
  Integer pj(static_cast<unsigned long>(F.prime()));
  for (int j = 1; j < k; ++j) {
    Integer next = pj * static_cast<unsigned long>(F.prime());
    ZPoly E = target;
    ZPoly prod = zmul(G, H);
    if (E.size() < prod.size()) E.resize(prod.size(), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) E[i] -= prod[i];
    zreduce(E, next);
    for (auto& c : E) c /= pj;
    FpPoly e = F.from(E);
    auto [q, a] = F.divmod(F.mul(t, e), g0);
    FpPoly b = F.add(F.mul(s, e), F.mul(q, h0));
    if (G.size() < a.size()) G.resize(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) G[i] += pj * static_cast<unsigned long>(a[i]);
    if (H.size() < b.size()) H.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) H[i] += pj * static_cast<unsigned long>(b[i]);
    pj = next;
  }
  return {G, H};
}

void hensel_tree(const Fp& F, const ZPoly& target, const std::vector<FpPoly>& factors, int k, std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(target);
    return;
  }
  std::size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  FpPoly g0{1}, h0{1};
  for (const auto& f : left) g0 = F.mul(g0, f);
  for (const auto& f : right) h0 = F.mul(h0, f);
  auto [G, H] = hensel_pair(F, target, g0, h0, k);
  hensel_tree(F, G, left, k, out);
  hensel_tree(F, H, right, k, out);
}

bool zdivides(const ZPoly& g, const ZPoly& f, ZPoly* quotient) {
  auto [q, r] = from_zpoly(f).divmod(from_zpoly(g));
  if (!r.is_zero()) return false;
  for (const auto& c : q.coefficients()) {
    if (c.get_den() != 1) return false;
  }
  if (quotient) *quotient = to_zpoly(q);
  return true;
}

struct PrimeChoice {
  std::uint64_t prime = 0;
  std::vector<std::pair<FpPoly, int>> ddf;
  std::size_t count = 0;
};

// Factors a primitive squarefree integer polynomial with positive leading
// coefficient, degree >= 2, nonzero constant term.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const Integer& lc = f.back();
  static const std::vector<std::uint64_t> primes = small_primes(20000);

  std::bitset<kMaxBits> possible;
  possible.set();
  PrimeChoice best;
  int good = 0;
  for (std::uint64_t p : primes) {
    if (p == 2) continue;
    Fp F(p);
    if (F.reduce(lc) == 0) continue;
    FpPoly fp = F.monic(F.from(f));
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    auto ddf = distinct_degree(F, fp);
    std::size_t count = 0;
    std::bitset<kMaxBits> sums;
    sums.set(0);
    for (const auto& [g, d] : ddf) {
      std::size_t copies = (g.size() - 1) / static_cast<std::size_t>(d);
      count += copies;
      for (std::size_t c = 0; c < copies; ++c) sums |= sums << static_cast<std::size_t>(d);
    }
    possible &= sums;
    if (best.prime == 0 || count < best.count) best = {p, ddf, count};
    ++good;
    bool only_trivial = true;
    for (int d = 1; d < n; ++d) {
      if (possible.test(static_cast<std::size_t>(d))) only_trivial = false;
    }
    if (count == 1 || only_trivial) return {f};
    if (good >= 7) break;
  }
  if (best.prime == 0) throw computation_error("no suitable prime for modular factorization");

  Fp F(best.prime);
  std::mt19937_64 rng(0x7419u);
  std::vector<FpPoly> modular;
  for (const auto& [g, d] : best.ddf) equal_degree(F, g, d, rng, modular);
  std::sort(modular.begin(), modular.end());

  // Mignotte-style bound on coefficients of lc * (any factor) / lc(factor).
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = 2 * abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  Integer modulus = 1;
  int k = 0;
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best.prime);
    ++k;
  }

  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly target = f;
  for (auto& c : target) c *= lc_inv;
  zreduce(target, modulus);

  std::vector<ZPoly> lifted;
  hensel_tree(F, target, modular, k, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  for (std::size_t size = 1; 2 * size <= remaining; ++size) {
    bool restart = true;
    while (restart) {
      restart = false;
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        if (!used[i]) pool.push_back(i);
      }
      if (2 * size > pool.size()) break;
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      const Integer& rest_lc = rest.back();
      while (true) {
        int deg = 0;
        for (auto i : pick) deg += static_cast<int>(lifted[pool[i]].size()) - 1;
        if (possible.test(static_cast<std::size_t>(deg))) {
          // Constant-term test before building the full product.
          Integer c0 = rest_lc;
          for (auto i : pick) c0 = (c0 * lifted[pool[i]][0]) % modulus;
          mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
          if (c0 > modulus / 2) c0 -= modulus;
          bool plausible = c0 != 0 && mpz_divisible_p(Integer(rest_lc * rest[0]).get_mpz_t(), c0.get_mpz_t());
          if (plausible) {
            ZPoly g{rest_lc};
            for (auto i : pick) {
              g = zmul(g, lifted[pool[i]]);
              zreduce(g, modulus);
            }
            zsymmetric(g, modulus);
            Poly gp = primitive_part(from_zpoly(g));
            ZPoly gz = to_zpoly(gp);
            ZPoly quotient;
            if (zdivides(gz, rest, &quotient)) {
              result.push_back(gz);
              rest = quotient;
              for (auto i : pick) used[pool[i]] = true;
              remaining -= size;
              restart = true;
              break;
            }
          }
        }
        // Next combination.
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == pool.size() - size + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  if (rest.size() > 1) result.push_back(to_zpoly(primitive_part(from_zpoly(rest))));
  return result;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

std::vector<Integer> divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> small{1};
  for (Integer d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    std::size_t base = small.size();
    Integer power = 1;
    for (int i = 0; i < e; ++i) {
      power *= d;
      for (std::size_t j = 0; j < base; ++j) small.push_back(small[j] * power);
    }
  }
  if (m > 1) {
    std::size_t base = small.size();
    for (std::size_t j = 0; j < base; ++j) small.push_back(small[j] * m);
  }
  return small;
}

// Splits a primitive squarefree integer polynomial into irreducibles.
void factor_squarefree_primitive(const Poly& f, std::vector<Poly>& out) {
  if (f.degree() <= 0) return;
  if (f.coeff(0) == 0) {
    out.push_back(Poly::x());
    factor_squarefree_primitive(primitive_part(f / Poly::x()), out);
    return;
  }
  if (f.degree() == 1) {
    out.push_back(f);
    return;
  }
  bool complete = false;
  std::vector<Rational> roots = rational_roots(f, &complete);
  if (complete && !roots.empty()) {
    Poly rest = f;
    for (const auto& r : roots) {
      Poly lin = primitive_part(Poly{-r, Rational(1)});
      out.push_back(lin);
      rest = rest / lin;
    }
    factor_squarefree_primitive(primitive_part(rest), out);
    return;
  }
  if (complete && f.degree() <= 3) {
    out.push_back(f);
    return;
  }
  if (eisenstein_irreducible(f)) {
    out.push_back(f);
    return;
  }
  for (const auto& z : zassenhaus(to_zpoly(f))) out.push_back(from_zpoly(z));
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw usage_error("squarefree decomposition of the zero polynomial");
  std::vector<Factor> out;
  if (p.degree() == 0) return out;
  Poly f = p.monic();
  Poly a = gcd(f, f.derivative());
  Poly b = f / a;
  Poly c = f.derivative() / a;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Rational> rational_roots(const Poly& p, bool* complete) {
  if (complete) *complete = false;
  if (p.is_zero()) throw usage_error("rational roots of the zero polynomial");
  Poly f = primitive_part(p);
  std::vector<Rational> roots;
  if (f.coeff(0) == 0) {
    roots.emplace_back(0);
    while (f.coeff(0) == 0 && f.degree() > 0) f = f / Poly::x();
  }
  if (f.degree() <= 0) {
    if (complete) *complete = true;
    return roots;
  }
  static const Integer kLimit("1000000000000");
  Integer a0 = f.coeff(0).get_num();
  Integer an = f.leading().get_num();
  if (abs(a0) > kLimit || abs(an) > kLimit) return roots;
  auto num = divisors(a0);
  auto den = divisors(an);
  for (const auto& q : den) {
    for (const auto& r : num) {
      for (int s : {1, -1}) {
        Rational cand(Integer(s * r), q);
        cand.canonicalize();
        if (cand.get_den() != q) continue;
        if (f.eval(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (complete) *complete = true;
  return roots;
}

bool eisenstein_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  for (int shift : {0, 1, -1}) {
    Poly f = primitive_part(shift == 0 ? p : taylor_shift(p, Rational(shift)));
    Integer g = 0;
    for (int i = 0; i < f.degree(); ++i) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.coeff(i).get_num_mpz_t());
    }
    if (g <= 1) continue;
    // Trial division up to a modest limit; a large remaining cofactor is
    // tested as-is only when it is prime.
    std::vector<Integer> cands;
    Integer m = g;
    for (Integer d = 2; d * d <= m && d < 100000; ++d) {
      if (m % d != 0) continue;
      cands.push_back(d);
      while (m % d == 0) m /= d;
    }
    if (m > 1 && mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) cands.push_back(m);
    Integer a0 = f.coeff(0).get_num();
    Integer an = f.leading().get_num();
    for (const auto& q : cands) {
      if (an % q == 0) continue;
      if (a0 % (q * q) == 0) continue;
      return true;
    }
  }
  return false;
}

std::vector<Poly> irreducible_factors(const Poly& p, int max_degree) {
  if (p.is_zero()) throw usage_error("cannot factor the zero polynomial");
  if (p.degree() > max_degree) {
    throw cap_error("degree " + std::to_string(p.degree()) + " exceeds the factorization cap of " +
                    std::to_string(max_degree));
  }
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  factor_squarefree_primitive(primitive_part(squarefree_part(p)), out);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<Factor> factor_rationals(const Poly& p, int max_degree) {
  if (p.is_zero()) throw usage_error("cannot factor the zero polynomial");
  if (p.degree() > max_degree) {
    throw cap_error("degree " + std::to_string(p.degree()) + " exceeds the factorization cap of " +
                    std::to_string(max_degree));
  }
  std::vector<Factor> out;
  for (const auto& part : squarefree_decomposition(p)) {
    std::vector<Poly> pieces;
    factor_squarefree_primitive(primitive_part(part.poly), pieces);
    for (auto& piece : pieces) out.push_back({std::move(piece), part.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return poly_less(a.poly, b.poly);
  });
  return out;
}

bool is_irreducible(const Poly& p, int max_degree) {
  if (p.degree() < 1) return false;
  auto sqf = squarefree_part(p);
  if (sqf.degree() != p.degree()) return false;
  return irreducible_factors(p, max_degree).size() == 1;
}

}  // namespace trigfield
