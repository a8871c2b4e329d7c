#pragma once

#include <string_view>

#include "rhg/field.hpp"
#include "rhg/ramification.hpp"

namespace rhg {

// Largest exponent the parser accepts.
inline constexpr long kMaxExponent = 10000;

// "Q" or "F<p>" with p prime. Throws PreconditionError otherwise.
Field parse_field(std::string_view tag);

// Integer literals, the one variable `var`, + - * / ^, unary minus and
// parentheses. Exponents must be nonnegative integer constants. The value is
// computed directly in `field`. Positions in errors are 1-based columns.
// Throws ParseError for syntax, ArithmeticError for a division by zero or a
// coefficient denominator that vanishes in the field, PreconditionError for a
// constant expression.
RationalMap parse_rational_expr(std::string_view text, std::string_view var, const Field& field);

}  // namespace rhg
