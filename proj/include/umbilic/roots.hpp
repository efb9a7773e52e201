#pragma once

#include <vector>

#include "umbilic/poly.hpp"
#include "umbilic/rational.hpp"
#include "umbilic/upoly.hpp"

namespace umbilic {

/// One real root inside [lo, hi] (a point when lo == hi). Endpoints of a proper interval
/// are never roots of the polynomial.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
  double approx() const { return to_double((lo + hi) / 2); }
};

using RootIntervals = std::vector<RootInterval>;

inline constexpr unsigned long kDefaultRootWidthBits = 60;

/// Isolates all real roots, sorted, with multiplicities from the square-free decomposition,
/// refined to width 2^-width_bits. Throws DomainError on the zero polynomial.
RootIntervals isolate_real_roots(const UPoly& p, unsigned long width_bits = kDefaultRootWidthBits);

/// Same for a bivariate polynomial that involves at most one variable.
RootIntervals isolate_real_roots(const BiPoly& p, unsigned long width_bits = kDefaultRootWidthBits);

/// Narrows an interval holding a single simple root of the square-free polynomial g.
void refine_root(const UPoly& g, RootInterval& root, unsigned long width_bits);

/// Sign of q at the unique root of the square-free polynomial g inside `root`.
int sign_at_root(const UPoly& q, const UPoly& g, const RootInterval& root);

/// Number of roots of q in the open interval (lo, hi), bounded by Descartes' rule
/// (exact when 0 or 1).
int descartes_bound(const UPoly& q, const Rational& lo, const Rational& hi);

struct LinearFactor {
  double theta = 0.0;  // direction in [0, pi) on which the form vanishes
  int multiplicity = 1;
  bool vertical = false;  // the factor u: direction (0, 1)
  UPoly minimal;          // square-free factor of fn(1, t) having t = tan(theta) as a root
  RootInterval root;      // isolating interval of t (unused when vertical)
};

struct LinearFactors {
  int R = 0;  // number of distinct real linear factors
  std::vector<LinearFactor> factors;  // sorted by theta

  bool all_simple() const {
    for (const auto& f : factors) {
      if (f.multiplicity != 1) return false;
    }
    return true;
  }
};

/// Real linear factors of a nonzero binary form, from the real roots of fn(1, t) and the
/// power of u dividing fn. Throws DomainError if fn is zero or not homogeneous.
LinearFactors real_linear_factors(const BiPoly& fn);

/// fn(1, t) as a univariate polynomial in t.
UPoly dehomogenize(const BiPoly& fn);

}  // namespace umbilic
