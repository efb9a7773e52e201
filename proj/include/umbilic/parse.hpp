#pragma once

#include <string_view>

#include "umbilic/poly.hpp"

namespace umbilic {

/// Parses a polynomial in x, y. Grammar: integer and rational literals (`3`, `7/2`),
/// `+ - * ^`, parentheses; `^` binds tighter than `*`, which binds tighter than `+`/`-`.
/// No implicit multiplication; exponents are nonnegative integer literals.
/// Throws ParseError carrying the byte offset of the offending token.
BiPoly parse_poly(std::string_view text);

/// Same grammar over the variables u, v, w.
TriPoly parse_tripoly(std::string_view text);

}  // namespace umbilic
