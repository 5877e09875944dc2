#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigfield/galois.hpp"

namespace trigfield {

enum class FieldTag { kC, kO, kP, kT1 };
enum class Status { kIn, kOut, kUnknown };

std::string to_string(FieldTag f);
std::string to_string(Status s);

struct Verdict {
  FieldTag field = FieldTag::kC;
  Status status = Status::kUnknown;
  std::string rule;
  std::string detail;
};

struct RuleInfo {
  const char* id;
  FieldTag field;
  Status status;
  const char* summary;
};

inline constexpr const char* kRuleRegistryVersion = "1";
/// Closed set of certificate identifiers.
const std::vector<RuleInfo>& rule_registry();

inline constexpr const char* kConjectureDoublingCube = "CONJ-T1-DOUBLING-CUBE";
inline constexpr const char* kConjectureT1Open = "CONJ-T1-OPEN";

/// Splitting data shared by the classifiers; empty degree when a galois-engine
/// cap was hit.
struct SplitInfo {
  std::optional<int> degree;
  bool abelian = false;
  std::string cap_reason;
  std::optional<GaloisGroup> group;
};

SplitInfo split_info(const Poly& p);

Verdict classify_constructible(const Poly& p);
Verdict classify_origami(const Poly& p);
Verdict classify_partition(const Poly& p);
Verdict classify_T1(const Poly& p);

Verdict classify_constructible(const Poly& p, const SplitInfo& info);
Verdict classify_origami(const Poly& p, const SplitInfo& info);
Verdict classify_T1(const Poly& p, const SplitInfo& info);

/// C, O, P, T1 in that order. Throws a usage error unless p is irreducible.
std::vector<Verdict> classify_all(const Poly& p);

/// x^3 + p x + q in the three-real-root regime, by the trigonometric formula.
/// Roots for k = 0, 1, 2 at the working precision.
std::vector<Real> solve_cubic_trig(const Rational& p, const Rational& q);

std::vector<Verdict> doubling_cube_report();

std::string render_verdicts_text(const std::vector<Verdict>& verdicts);
/// `field,status,rule,detail` with a header line.
std::string render_verdicts_records(const std::vector<Verdict>& verdicts);

/// Rational c with p = k (x^2n + 2c x^n + 1) and |c| <= 1, if any.
struct UnitFamilyMatch {
  int n = 0;
  Rational c;
};
std::optional<UnitFamilyMatch> match_unit_family(const Poly& p);

/// Rational c with p = k (D_n(x) - 2c) and |c| <= 1, if any.
std::optional<UnitFamilyMatch> match_sum_conj_family(const Poly& p);

}  // namespace trigfield
