#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigfield/algebraic.hpp"
#include "trigfield/ratfunc.hpp"

namespace trigfield {

struct UnitRadicalSpec {
  Rational a;
  Rational b;
  int n = 1;
};

struct UnitRadicalResult {
  Poly minpoly;  // primitive integer form
  Poly raw;      // primitive form of x^(2n) - (2a/s) x^n + 1, s = sqrt(a^2 + b^2)
  bool raw_was_minimal = true;
  AlgebraicNumber root;  // the principal root ((a + bi)/s)^(1/n)
};

/// Minimal polynomial of the principal n-th root of (a + bi)/|a + bi|.
UnitRadicalResult minpoly_unit_radical(const UnitRadicalSpec& spec);

struct RootOfUnity {
  bool is_root = false;
  std::optional<long> order;
};

RootOfUnity is_root_of_unity(const AlgebraicNumber& x);

/// Minimal polynomial over Q(c) of w = z + conj(z) where z^n = c + i sqrt(1 - c^2).
PolyC minpoly_sum_conj(int n);

struct PatternCheck {
  std::string name;     // S_odd, S_0, S_2, S_4, S_6, S_8
  std::string formula;  // printed form of the conjectured value
  bool pass = true;
  int checked = 0;  // number of coefficients compared
  std::optional<int> first_k;
  std::optional<int> power;  // exponent of x at the first counterexample
  Rational actual;
  Rational expected;
};

struct PatternAudit {
  int max_n = 0;
  std::vector<PolyC> rows;  // rows[i] is the polynomial for n = i + 1
  std::vector<PatternCheck> patterns;
  bool dickson_pass = true;
  std::optional<int> dickson_first_fail;
  bool closed_form_pass = true;
  std::optional<int> closed_form_first_fail;
};

/// Audits the conjectured coefficient patterns of minpoly_sum_conj(n) for
/// n = 3..max_n, and the Dickson closed form for n = 1..max_n.
PatternAudit audit_s_patterns(int max_n);

std::string render_audit(const PatternAudit& audit);

}  // namespace trigfield
