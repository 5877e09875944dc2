#pragma once

#include <string>
#include <vector>

#include "trigfield/algebraic.hpp"

namespace trigfield {

inline constexpr int kGaloisInputDegreeCap = 6;
inline constexpr int kSplittingDegreeCap = 24;

/// Q(theta) with theta a distinguished root of a monic irreducible polynomial.
struct NumberField {
  Poly generator_minpoly;
  ComplexBox embedding;
  int degree = 1;
  AlgebraicNumber generator = AlgebraicNumber::from_rational(Rational(0));
};

/// One adjunction in the tower: a root gamma of an irreducible factor of
/// degree `step_degree` over the field of degree `base_degree`, with new
/// generator theta + k*gamma.
struct TowerStep {
  int base_degree = 1;
  int step_degree = 1;
  int k = 1;
  int degree = 1;
};

struct SplittingField {
  Poly input;  // monic form of the input polynomial
  NumberField field;
  /// Root i of the input as q_i(theta) mod generator_minpoly; ordered by the
  /// numeric value under the embedding (real part, then imaginary part).
  std::vector<Poly> roots_in_field;
  /// theta = sum of k * root[index] over these pairs.
  std::vector<std::pair<int, int>> generator_combination;
  std::vector<TowerStep> tower;
};

struct GaloisGroup {
  std::vector<std::vector<int>> permutations;  // 0-based root indices, identity first
  long order = 0;
  bool abelian = true;
  std::vector<Poly> images;  // image of theta under each automorphism
};

/// Splitting field of a squarefree polynomial of degree <= 6 with splitting
/// degree <= 24.
SplittingField splitting_field(const Poly& p);

GaloisGroup galois_group(const SplittingField& sf);

bool is_abelian(const GaloisGroup& g);

/// Element q(theta) evaluated under the embedding.
Complex evaluate_in_field(const SplittingField& sf, const Poly& q, int bits = 256);

/// Images of every root under the permutation.
std::vector<Complex> root_values(const SplittingField& sf, int bits = 256);

/// Greedy generating set in the sorted order of g.permutations.
std::vector<std::vector<int>> generators(const GaloisGroup& g);

/// 1-based cycle notation, e.g. `(1 2 3)(4 5)`; the identity is `()`.
std::string cycle_notation(const std::vector<int>& perm);

struct DivisibilityCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct DivisibilityReport {
  int n = 0;
  long order = 0;
  std::vector<DivisibilityCheck> checks;
  bool pass = true;
};

/// n | |G|, |G| | n!, and degree multiplicativity at every tower level.
DivisibilityReport check_divisibility_laws(const Poly& p, const SplittingField& sf, const GaloisGroup& g);

/// Full query: splitting field, group and divisibility checks.
struct GaloisReport {
  SplittingField field;
  GaloisGroup group;
  DivisibilityReport laws;
};

GaloisReport galois_report(const Poly& p);

/// One line per field: polynomial, splitting degree, order, abelian flag,
/// generators.
std::string render_galois_text(const GaloisReport& r);
std::string render_galois_record(const GaloisReport& r);

}  // namespace trigfield
