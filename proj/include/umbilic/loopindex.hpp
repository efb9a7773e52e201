#pragma once

#include <optional>

#include "umbilic/linefield.hpp"
#include "umbilic/poly.hpp"
#include "umbilic/rational.hpp"

namespace umbilic {

/// Index in halves of the line field a dx^2 + b dx dy + c dy^2 along the circle with the
/// given center and radius, valid wherever b^2 - 4ac >= 0 with equality only at common zeros.
/// Computed exactly as the degree of (a - c, b) on a rational parametrization of the circle,
/// by a Cauchy index over the real roots of b. Empty when the circle meets a zero of
/// (a - c, b).
std::optional<int> exact_loop_index(const BiPoly& a, const BiPoly& b, const BiPoly& c, const Rational& cx,
                                    const Rational& cy, const Rational& radius);

/// Index at radius r and r/2 around (cx, cy): exact when both loops avoid the zeros of
/// (a - c, b), otherwise the sampled winding of `sampler`.
CertifiedIndex loop_index(const BiPoly& a, const BiPoly& b, const BiPoly& c, const FormSampler& sampler, double cx,
                          double cy, double radius, int samples);

}  // namespace umbilic
