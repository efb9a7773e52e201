#pragma once

// Integer polynomial helpers (low to high) behind the exact univariate routines.

#include <vector>

#include "umbilic/rational.hpp"

namespace umbilic {

class UPoly;

using ZPoly = std::vector<Integer>;

/// Primitive integer multiple of a with positive leading coefficient.
ZPoly primitive_part(const UPoly& a);
ZPoly primitive_part(ZPoly a);
UPoly to_upoly(const ZPoly& a);
Integer content(const ZPoly& a);
int degree(const ZPoly& a);

/// True when b divides a in Z[x] (b primitive).
bool divides(const ZPoly& b, const ZPoly& a);

/// Primitive gcd of two nonzero primitive polynomials (multi-modular, verified by trial division).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Sign of a(num / 2^shift) computed exactly.
int sign_at_dyadic(const ZPoly& a, const Integer& num, unsigned long shift);
/// Sign of a at a rational point.
int sign_at(const ZPoly& a, const Rational& x);

}  // namespace umbilic
