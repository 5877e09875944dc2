#pragma once

#include <string_view>

#include "trigfield/ratfunc.hpp"

namespace trigfield {

/// Parses the polynomial text format: integer literals, `x`, the parameter
/// `c`, `+ - * /`, `^` with non-negative integer exponents and parentheses.
/// Division is only allowed by expressions free of x.
PolyC parse_polyc(std::string_view text);

/// As parse_polyc, but rejects any occurrence of the parameter c.
Poly parse_poly(std::string_view text);

}  // namespace trigfield
