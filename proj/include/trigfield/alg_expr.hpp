#pragma once

#include <string_view>

#include "trigfield/algebraic.hpp"

namespace trigfield {

/// Parses an algebraic-number expression: integer literals, `i`, `+ - * /`,
/// `^` with integer exponents, parentheses and the functions sqrt(x),
/// cbrt(x), root(x, n), conj(x), re(x), im(x), abs(x). Roots are principal.
AlgebraicNumber parse_algebraic(std::string_view text);

}  // namespace trigfield
