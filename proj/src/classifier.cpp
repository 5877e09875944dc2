#include "trigfield/classifier.hpp"

#include <iomanip>
#include <sstream>

#include "trigfield/factor.hpp"
#include "trigfield/sturm.hpp"

namespace trigfield {

namespace {

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

// Prime factors other than 2 and 3.
long strip_2_3(long v) {
  while (v % 2 == 0) v /= 2;
  while (v % 3 == 0) v /= 3;
  return v;
}

Verdict make(FieldTag f, Status s, const char* rule, std::string detail) {
  return {f, s, rule, std::move(detail)};
}

void require_irreducible(const Poly& p) {
  if (p.degree() < 1) throw usage_error("classification needs a nonconstant polynomial");
  if (!is_irreducible(p)) throw usage_error("polynomial " + to_string(primitive_part(p)) + " is not irreducible");
}

// x^n - a with a rational and n >= 2.
bool is_binomial(const Poly& p) {
  if (p.degree() < 2) return false;
  for (int i = 1; i < p.degree(); ++i) {
    if (p.coeff(i) != 0) return false;
  }
  return p.coeff(0) != 0;
}

}  // namespace

std::string to_string(FieldTag f) {
  switch (f) {
    case FieldTag::kC: return "C";
    case FieldTag::kO: return "O";
    case FieldTag::kP: return "P";
    case FieldTag::kT1: return "T1";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kIn: return "IN";
    case Status::kOut: return "OUT";
    case Status::kUnknown: return "UNKNOWN";
  }
  return "?";
}

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> rules = {
      {"C-POW2-SPLIT", FieldTag::kC, Status::kIn, "splitting degree is a power of 2"},
      {"C-NONPOW2-SPLIT", FieldTag::kC, Status::kOut, "splitting degree is not a power of 2"},
      {"C-NONPOW2-DEGREE", FieldTag::kC, Status::kOut, "polynomial degree is not a power of 2"},
      {"C-CAP", FieldTag::kC, Status::kUnknown, "splitting field beyond the galois-engine caps"},
      {"O-2-3-SPLIT", FieldTag::kO, Status::kIn, "splitting degree has no prime factor above 3"},
      {"O-OTHER-PRIME-SPLIT", FieldTag::kO, Status::kOut, "splitting degree has a prime factor above 3"},
      {"O-OTHER-PRIME-DEGREE", FieldTag::kO, Status::kOut, "polynomial degree has a prime factor above 3"},
      {"O-CAP", FieldTag::kO, Status::kUnknown, "splitting field beyond the galois-engine caps"},
      {"P-MIXED-ROOTS", FieldTag::kP, Status::kOut, "both real and nonreal roots"},
      {"P-DEGREE-LE-2", FieldTag::kP, Status::kIn, "degree at most 2"},
      {"P-CUBIC-ALL-REAL", FieldTag::kP, Status::kIn, "cubic with three real roots"},
      {"P-SUM-CONJ-FAMILY", FieldTag::kP, Status::kIn, "D_n(x) - 2c with rational |c| <= 1"},
      {"P-NO-RULE", FieldTag::kP, Status::kUnknown, "no proved rule applies"},
      {"T1-ABELIAN", FieldTag::kT1, Status::kIn, "abelian Galois group"},
      {"T1-CONSTRUCTIBLE", FieldTag::kT1, Status::kIn, "ruler-and-compass constructible"},
      {"T1-CUBIC-ALL-REAL", FieldTag::kT1, Status::kIn, "cubic with three real roots"},
      {"T1-UNIT-FAMILY", FieldTag::kT1, Status::kIn, "x^2n + 2c x^n + 1 with rational |c| <= 1"},
      {"T1-NO-RULE", FieldTag::kT1, Status::kUnknown, "no proved rule applies"},
  };
  return rules;
}

SplitInfo split_info(const Poly& p) {
  SplitInfo info;
  try {
    SplittingField sf = splitting_field(p);
    GaloisGroup g = galois_group(sf);
    info.degree = sf.field.degree;
    info.abelian = g.abelian;
    info.group = std::move(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCapExceeded) throw;
    info.cap_reason = e.what();
  }
  return info;
}

Verdict classify_constructible(const Poly& p) {
  require_irreducible(p);
  return classify_constructible(p, split_info(p));
}

Verdict classify_constructible(const Poly& p, const SplitInfo& info) {
  const FieldTag f = FieldTag::kC;
  if (info.degree) {
    std::string d = "splitting degree " + std::to_string(*info.degree);
    if (is_power_of_two(*info.degree)) return make(f, Status::kIn, "C-POW2-SPLIT", d + " is a power of 2");
    return make(f, Status::kOut, "C-NONPOW2-SPLIT", d + " is not a power of 2");
  }
  if (!is_power_of_two(p.degree())) {
    return make(f, Status::kOut, "C-NONPOW2-DEGREE",
                "degree " + std::to_string(p.degree()) + " divides the splitting degree and is not a power of 2");
  }
  return make(f, Status::kUnknown, "C-CAP", info.cap_reason);
}

Verdict classify_origami(const Poly& p) {
  require_irreducible(p);
  return classify_origami(p, split_info(p));
}

Verdict classify_origami(const Poly& p, const SplitInfo& info) {
  const FieldTag f = FieldTag::kO;
  if (info.degree) {
    std::string d = "splitting degree " + std::to_string(*info.degree);
    if (strip_2_3(*info.degree) == 1) return make(f, Status::kIn, "O-2-3-SPLIT", d + " = 2^a 3^b");
    return make(f, Status::kOut, "O-OTHER-PRIME-SPLIT", d + " has a prime factor above 3");
  }
  if (strip_2_3(p.degree()) != 1) {
    return make(f, Status::kOut, "O-OTHER-PRIME-DEGREE",
                "degree " + std::to_string(p.degree()) + " divides the splitting degree and has a prime factor above 3");
  }
  return make(f, Status::kUnknown, "O-CAP", info.cap_reason);
}

std::optional<UnitFamilyMatch> match_unit_family(const Poly& p) {
  if (p.degree() < 2 || p.degree() % 2 != 0) return std::nullopt;
  Poly m = p.monic();
  const int n = p.degree() / 2;
  if (m.coeff(0) != 1) return std::nullopt;
  for (int i = 1; i < 2 * n; ++i) {
    if (i != n && m.coeff(i) != 0) return std::nullopt;
  }
  Rational c = m.coeff(n) / 2;
  if (abs(c) > 1) return std::nullopt;
  return UnitFamilyMatch{n, c};
}

std::optional<UnitFamilyMatch> match_sum_conj_family(const Poly& p) {
  if (p.degree() < 1) return std::nullopt;
  const int n = p.degree();
  Poly diff = p.monic() - dickson(n);
  if (diff.degree() > 0) return std::nullopt;
  Rational c = -diff.coeff(0) / 2;
  if (abs(c) > 1) return std::nullopt;
  return UnitFamilyMatch{n, c};
}

Verdict classify_partition(const Poly& p) {
  require_irreducible(p);
  const FieldTag f = FieldTag::kP;
  const int n = p.degree();
  const int real = SturmSequence(p).count_all();
  std::string counts = std::to_string(real) + " real of " + std::to_string(n) + " roots";
  if (real > 0 && real < n) return make(f, Status::kOut, "P-MIXED-ROOTS", counts);
  if (n <= 2) return make(f, Status::kIn, "P-DEGREE-LE-2", "degree " + std::to_string(n) + ", " + counts);
  if (n == 3 && real == 3) return make(f, Status::kIn, "P-CUBIC-ALL-REAL", counts);
  if (auto m = match_sum_conj_family(p)) {
    return make(f, Status::kIn, "P-SUM-CONJ-FAMILY",
                "D_" + std::to_string(m->n) + "(x) - 2c with c = " + to_string(m->c));
  }
  return make(f, Status::kUnknown, "P-NO-RULE", counts + "; no proved rule applies");
}

Verdict classify_T1(const Poly& p) {
  require_irreducible(p);
  return classify_T1(p, split_info(p));
}

Verdict classify_T1(const Poly& p, const SplitInfo& info) {
  const FieldTag f = FieldTag::kT1;
  if (info.degree && info.abelian) {
    return make(f, Status::kIn, "T1-ABELIAN", "abelian group of order " + std::to_string(*info.degree));
  }
  if (info.degree && is_power_of_two(*info.degree)) {
    return make(f, Status::kIn, "T1-CONSTRUCTIBLE", "splitting degree " + std::to_string(*info.degree) + " is a power of 2");
  }
  if (p.degree() == 3 && SturmSequence(p).count_all() == 3) {
    return make(f, Status::kIn, "T1-CUBIC-ALL-REAL", "3 real of 3 roots");
  }
  if (auto m = match_unit_family(p)) {
    return make(f, Status::kIn, "T1-UNIT-FAMILY",
                "x^" + std::to_string(2 * m->n) + " + 2c x^" + std::to_string(m->n) + " + 1 with c = " + to_string(m->c) +
                    ", n = " + std::to_string(m->n));
  }
  std::string why = info.degree ? "nonabelian group of order " + std::to_string(*info.degree) : info.cap_reason;
  const char* conj = is_binomial(p) && p.degree() % 2 == 1 ? kConjectureDoublingCube : kConjectureT1Open;
  return make(f, Status::kUnknown, "T1-NO-RULE",
              why + "; no exclusion criterion is proved; conjecture " + conj + " expects OUT");
}

std::vector<Verdict> classify_all(const Poly& p) {
  require_irreducible(p);
  SplitInfo info = split_info(p);
  return {classify_constructible(p, info), classify_origami(p, info), classify_partition(p), classify_T1(p, info)};
}

std::vector<Real> solve_cubic_trig(const Rational& p, const Rational& q) {
  if (p >= 0) {
    throw usage_error("solve_cubic_trig needs p < 0; p = " + to_string(p) + " gives at most one real root");
  }
  // |(3q/2p) sqrt(-3/p)|^2 = -27 q^2 / (4 p^3)
  const Rational mag2 = -27 * q * q / (4 * p * p * p);
  if (mag2 > 1) {
    PrecisionScope scope(64);
    throw usage_error("solve_cubic_trig outside the three-real-root regime: |(3q/2p) sqrt(-3/p)| = " +
                      sqrt(Real(mag2)).to_string(12) + " > 1");
  }
  Real rp(p), rq(q);
  Real arg = Real(3) * rq / (Real(2) * rp) * sqrt(Real(-3) / rp);
  if (arg > Real(1)) arg = Real(1);
  if (arg < Real(-1)) arg = Real(-1);
  Real amp = Real(2) * sqrt(-rp / Real(3));
  Real phi = acos(arg) / Real(3);
  Real step = Real::pi() * Real(2) / Real(3);
  std::vector<Real> roots;
  for (int k = 0; k < 3; ++k) roots.push_back(amp * cos(phi - step * Real(k)));
  return roots;
}

std::vector<Verdict> doubling_cube_report() { return classify_all(Poly{Rational(-2), Rational(0), Rational(0), Rational(1)}); }

std::string render_verdicts_text(const std::vector<Verdict>& verdicts) {
  std::size_t w_rule = 4;
  for (const auto& v : verdicts) w_rule = std::max(w_rule, v.rule.size());
  std::ostringstream out;
  out << std::left << std::setw(6) << "field" << std::setw(8) << "status" << std::setw(static_cast<int>(w_rule) + 2)
      << "rule"
      << "detail\n";
  for (const auto& v : verdicts) {
    out << std::left << std::setw(6) << to_string(v.field) << std::setw(8) << to_string(v.status)
        << std::setw(static_cast<int>(w_rule) + 2) << v.rule << v.detail << "\n";
  }
  return out.str();
}

std::string render_verdicts_records(const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  out << "field,status,rule,detail\n";
  for (const auto& v : verdicts) {
    std::string detail = v.detail;
    bool quote = detail.find_first_of(",\"") != std::string::npos;
    if (quote) {
      std::string esc;
      for (char ch : detail) {
        if (ch == '"') esc += '"';
        esc += ch;
      }
      detail = "\"" + esc + "\"";
    }
    out << to_string(v.field) << "," << to_string(v.status) << "," << v.rule << "," << detail << "\n";
  }
  return out.str();
}

}  // namespace trigfield
