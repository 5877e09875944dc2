#pragma once

// Brute-force automorphism count used as an independent oracle: integer
// relations among root monomials of degree <= 2 are found with an integral
// LLL reduction, then every root permutation is tested against them.

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "trigfield/complex.hpp"
#include "trigfield/roots.hpp"

namespace oracle {

using trigfield::Complex;
using trigfield::Real;

using IntVec = std::vector<mpz_class>;

inline mpz_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to a / b for b > 0.
inline mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class twice = 2 * a + b;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * b).get_mpz_t());
  return q;
}

// Integral LLL with delta = 3/4 on linearly independent rows.
inline void lll(std::vector<IntVec>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<mpz_class> d(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<mpz_class>> lam(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n)));
  auto D = [&](int i) -> mpz_class& { return d[static_cast<std::size_t>(i + 1)]; };  // D(-1) = 1
  auto L = [&](int i, int j) -> mpz_class& { return lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  d[0] = 1;
  D(0) = dot(b[0], b[0]);
  int k = 1;
  int kmax = 0;
  auto red = [&](int kk, int l) {
    if (2 * abs(L(kk, l)) > D(l)) {
      mpz_class q = round_div(L(kk, l), D(l));
      for (std::size_t c = 0; c < b[0].size(); ++c) {
        b[static_cast<std::size_t>(kk)][c] -= q * b[static_cast<std::size_t>(l)][c];
      }
      L(kk, l) -= q * D(l);
      for (int i = 0; i < l; ++i) L(kk, i) -= q * L(l, i);
    }
  };
  auto swap = [&](int kk) {
    std::swap(b[static_cast<std::size_t>(kk)], b[static_cast<std::size_t>(kk - 1)]);
    for (int j = 0; j < kk - 1; ++j) std::swap(L(kk, j), L(kk - 1, j));
    mpz_class lm = L(kk, kk - 1);
    mpz_class B = (D(kk - 2) * D(kk) + lm * lm) / D(kk - 1);
    for (int i = kk + 1; i <= kmax; ++i) {
      mpz_class t = L(i, kk);
      L(i, kk) = (D(kk) * L(i, kk - 1) - lm * t) / D(kk - 1);
      L(i, kk - 1) = (B * t + lm * L(i, kk)) / D(kk);
    }
    D(kk - 1) = B;
  };
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 0; j <= k; ++j) {
        mpz_class u = dot(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(j)]);
        for (int i = 0; i < j; ++i) u = (D(i) * u - L(k, i) * L(j, i)) / D(i - 1);
        if (j < k) {
          L(k, j) = u;
        } else {
          D(k) = u;
        }
      }
    }
    while (true) {
      red(k, k - 1);
      if (4 * D(k) * D(k - 2) < 3 * D(k - 1) * D(k - 1) - 4 * L(k, k - 1) * L(k, k - 1)) {
        swap(k);
        k = std::max(1, k - 1);
        continue;
      }
      for (int l = k - 2; l >= 0; --l) red(k, l);
      ++k;
      break;
    }
  }
}

inline mpz_class scaled(const Real& x, long shift) {
  Real s = trigfield::ldexp(x, shift);
  return mpz_class(s.to_rational().get_num() / s.to_rational().get_den());
}

// Number of permutations of `roots` preserving every small integer relation
// among the monomials 1, r_i, r_i r_j.
inline int automorphism_count(const std::vector<Complex>& roots) {
  const int n = static_cast<int>(roots.size());
  std::vector<std::pair<int, int>> monos{{-1, -1}};
  for (int i = 0; i < n; ++i) monos.emplace_back(i, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) monos.emplace_back(i, j);
  }
  auto value = [&](const std::pair<int, int>& m, const std::vector<int>& perm) {
    if (m.first < 0) return Complex(Real(1));
    Complex v = roots[static_cast<std::size_t>(perm[static_cast<std::size_t>(m.first)])];
    if (m.second >= 0) v = v * roots[static_cast<std::size_t>(perm[static_cast<std::size_t>(m.second)])];
    return v;
  };
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  const std::size_t dim = monos.size();
  const long shift = 200;
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec row(dim + 2, 0);
    row[i] = 1;
    Complex v = value(monos[i], id);
    row[dim] = scaled(v.re, shift);
    row[dim + 1] = scaled(v.im, shift);
    basis.push_back(row);
  }
  lll(basis);
  std::vector<IntVec> relations;
  const mpz_class small = mpz_class(1) << 40;
  for (const auto& row : basis) {
    bool ok = abs(row[dim]) < 1000 && abs(row[dim + 1]) < 1000;
    for (std::size_t i = 0; ok && i < dim; ++i) ok = abs(row[i]) < small;
    if (ok) relations.push_back(row);
  }
  int count = 0;
  std::vector<int> perm = id;
  const Real tol = trigfield::ldexp(Real(1), -120);
  do {
    bool keeps = true;
    for (const auto& rel : relations) {
      Complex s;
      for (std::size_t i = 0; i < dim && keeps; ++i) {
        if (rel[i] == 0) continue;
        s += value(monos[i], perm) * Complex(Real(trigfield::Rational(rel[i])));
      }
      if (!(abs(s) < tol)) keeps = false;
      if (!keeps) break;
    }
    if (keeps) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
