#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigfield/complex.hpp"

namespace trigfield {

enum class Family { kSinLine, kCotLine };

/// Scaling of the cot argument: cot(z) or cot(pi z / 2).
enum class CotScale { kPlain, kHalfPi };

std::string to_string(Family f);

/// sin_line: f(z) = sin z - a z - b.
/// cot_line: f(z) = cot(w z) - a - b / z, handled through the entire
///           function g(z) = z cos(w z) - (a z + b) sin(w z).
struct FamilyParams {
  Family family = Family::kSinLine;
  Rational a;
  Rational b;
  CotScale scale = CotScale::kPlain;
};

struct ComplexRect {
  Real re_lo;
  Real re_hi;
  Real im_lo;
  Real im_hi;

  /// Throws a usage error unless lo < hi on both axes.
  void validate() const;
  Real diagonal() const;
  bool contains(const Complex& z) const;  // open rectangle
};

ComplexRect make_rect(const Rational& re_lo, const Rational& re_hi, const Rational& im_lo, const Rational& im_hi);

struct RootRecord {
  Complex z;
  int multiplicity = 1;
  Real residual;
  FamilyParams params;
};

inline constexpr int kBoundaryJitterAttempts = 8;
inline constexpr double kWindingAcceptance = 0.25;

/// k-th derivative of the (pole-free) family function at z.
Complex family_derivative(const FamilyParams& p, const Complex& z, int k);
/// The family function itself: sin z - a z - b, or cot(w z) - a - b / z.
Complex family_value(const FamilyParams& p, const Complex& z);

/// Zeros of f inside the rectangle, with multiplicity. For the cot family the
/// zero of g at the origin introduced by clearing poles is not counted.
int count_zeros(const FamilyParams& p, const ComplexRect& rect);

/// Located zeros sorted by (re, im). Newton refinement to |f(z)| < tol.
std::vector<RootRecord> find_roots(const FamilyParams& p, const ComplexRect& rect, const Real& tol);

struct Tangency {
  int k = 0;
  Real x;
  Real a;
};

/// Solutions of tan x = x on (k pi, k pi + pi/2) and a_k = cos x_k for
/// k = 1..max_k: the slopes where z -> a z touches sin z.
std::vector<Tangency> tangency_locus(int max_k);

struct AtlasCell {
  Rational a;
  Rational b;
  std::vector<RootRecord> records;
  std::optional<std::string> error;
};

struct Atlas {
  Family family = Family::kSinLine;
  CotScale scale = CotScale::kPlain;
  ComplexRect window;
  std::vector<AtlasCell> cells;
};

/// Grid a = a_lo + (a_hi - a_lo) i / (steps - 1), same for b; a single step
/// uses the lower ends, as does a range with lo == hi. Cells run in
/// parallel; rows stay in grid order.
Atlas atlas(Family family, const Rational& a_lo, const Rational& a_hi, const Rational& b_lo, const Rational& b_hi,
            int steps, const ComplexRect& rect, const Real& tol, CotScale scale = CotScale::kPlain);

/// `a,b,re,im,multiplicity,residual`. Failed cells print `nan` coordinates,
/// multiplicity 0 and the error text as the residual.
std::string render_atlas_csv(const Atlas& atlas);
std::string render_roots_csv(const std::vector<RootRecord>& records);

/// `re,im,|f|` on an nx by ny grid of cell centres.
std::string contour_samples(const FamilyParams& p, const ComplexRect& rect, int nx, int ny);

inline constexpr const char* kTranscendenceNote =
    "roots for algebraic (a, b) are expected transcendental; this is not machine-checked";

}  // namespace trigfield
