#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trigfield {

using Integer = mpz_class;
/// Exact rational; gmpxx keeps it canonical (positive denominator, reduced).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws a usage error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses `p`, `-p`, `p/q` (decimal integers). Throws on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_perfect_square(const Rational& q);
/// Square root of a rational square; precondition is_perfect_square(q), q >= 0.
Rational exact_sqrt(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace trigfield
