#pragma once

#include "umbilic/poly.hpp"
#include "umbilic/upoly.hpp"

namespace umbilic {

/// Resultant of f and g with respect to variable `eliminate`, as a polynomial in the
/// other variable. Convention: determinant of the Sylvester matrix with the rows of f on
/// top and coefficients ordered from the highest power down, so Res_y(y - x, y + x) = 2x.
/// Computed exactly by evaluation/interpolation modulo word-size primes and Chinese
/// remaindering up to a Hadamard bound. Throws DomainError when f or g is zero or both
/// are constant in the eliminated variable.
BiPoly resultant(const BiPoly& f, const BiPoly& g, std::size_t eliminate);

/// Same, returned as a univariate polynomial in the kept variable.
UPoly resultant_univariate(const BiPoly& f, const BiPoly& g, std::size_t eliminate);

}  // namespace umbilic
