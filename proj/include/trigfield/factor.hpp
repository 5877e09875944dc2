#pragma once

#include <vector>

#include "trigfield/poly.hpp"

namespace trigfield {

/// Degree cap of the public factorizer.
inline constexpr int kFactorDegreeCap = 24;
/// Cap used by internal callers (norms, resultant compositions).
inline constexpr int kInternalFactorCap = 128;

struct Factor {
  Poly poly;  // primitive integer form, positive leading coefficient
  int multiplicity = 1;
};

/// Complete factorization over Q; content is dropped. Factors are sorted by
/// degree, then by coefficients. Throws a cap error above `max_degree`.
std::vector<Factor> factor_rationals(const Poly& p, int max_degree = kFactorDegreeCap);

/// Irreducible factors of the squarefree part of p, primitive integer form.
std::vector<Poly> irreducible_factors(const Poly& p, int max_degree = kInternalFactorCap);

bool is_irreducible(const Poly& p, int max_degree = kInternalFactorCap);

/// Squarefree decomposition (Yun): monic factors paired with multiplicity.
std::vector<Factor> squarefree_decomposition(const Poly& p);

/// Rational roots by the candidate test p/q with p | a0, q | an. Only
/// attempted when both coefficients are below 10^12 in magnitude; returns
/// an empty optional-like flag through `complete` otherwise.
std::vector<Rational> rational_roots(const Poly& p, bool* complete = nullptr);

/// True when some prime certifies irreducibility via Eisenstein's criterion
/// (possibly after the shifts x -> x + 1, x -> x - 1).
bool eisenstein_irreducible(const Poly& p);

}  // namespace trigfield
