#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "umbilic/finite.hpp"
#include "umbilic/linefield.hpp"
#include "umbilic/poly.hpp"
#include "umbilic/roots.hpp"
#include "umbilic/sphere.hpp"

namespace umbilic {

/// A value in Q[t] reduced modulo the minimal factor of a direction, read at the isolated
/// real root t = tan(theta). Vertical and rational directions give plain rationals.
struct AlgebraicValue {
  UPoly poly;
  std::optional<Rational> exact;
  double approx = 0.0;
  int sign = 0;  // exact sign at the root
};

enum class InfinitySource {
  LinearFactor,    // fn vanishes on the direction
  HessianBracket,  // |Hess fn| and the bracket of f_{n-1}, fn vanish on the direction
};

const char* to_string(InfinitySource s);

struct HfAtInfinity {
  AlgebraicValue closed_form;  // -((n-1) a_{n-1})^2 for the direction moved to (1, 0)
  double unit_value = 0.0;     // |Hess fn|(cos theta, sin theta)
  int sign = 0;                // sign of |Hess fn| on the direction
  bool matches = false;        // the moved |Hess fn| at (1, 0) equals the closed form
  bool certified = false;      // matches and negative
};

/// Closed forms of the chart u+ after the direction is moved to (1, 0) by the substitution
/// (u, v) -> (u - t v, t u + v) (vertical direction: (u, v) -> (-v, u)).
struct LemonCertificate {
  bool applicable = false;  // fn has no repeated real factor and, for n >= 3, b_{n-1} != 0
  AlgebraicValue a;         // a_{n-1}: coefficient of u^{n-1} v in the moved fn
  AlgebraicValue b;         // b_{n-1}: coefficient of u^{n-1} in the moved f_{n-1}
  AlgebraicValue const_C;   // C(1, 0, 0)
  AlgebraicValue lin_B_v;   // d/dv at the origin of B (n >= 3) or of B + 2vC (n = 2)
  AlgebraicValue lin_B_w;
  AlgebraicValue lin_T_v;
  AlgebraicValue lin_T_w;
  double normalized_det = 0.0;  // second-derivative determinant of the normalized discriminant
  bool flat = false;            // B + 2vC and T vanish at the origin
  bool const_C_matches = false;
  bool lin_B_matches = false;
  bool lin_B_w_corrected = false;  // n >= 3: dB/dw = -(n-1)(n-2) a^2 b, the value the expansion has
  bool lin_T_matches = false;
  bool positive_definite = false;
  bool det_matches = false;  // 16 n^2 (n >= 3) or 64 (n = 2)

  bool all() const {
    return flat && const_C_matches && lin_B_matches && lin_T_matches && positive_definite && det_matches;
  }
};

struct InfinityUmbilic {
  double theta = 0.0;  // direction in [0, pi); the points are theta and theta + pi
  InfinitySource source = InfinitySource::LinearFactor;
  LinearFactor direction;
  HfAtInfinity hf;
  LemonCertificate certificate;
  bool flat = false;  // every coefficient of the extended form vanishes there (exact)
  std::array<CertifiedIndex, 2> index{};  // at theta and theta + pi
  std::array<double, 2> index_radius{};
  std::string type = "Uncertified";  // "Lemon" when the certificate and both indices hold
};

struct InfinitySearch {
  std::vector<InfinityUmbilic> umbilics;  // sorted by theta
  bool repeated_factor = false;           // fn has a repeated real linear factor
  bool coprime = true;                    // n >= 3: fn, f_{n-1} share no real linear factor
  bool whole_equator = false;             // the extended form vanishes on the whole equator
  bool bracket_directions = false;        // HessianBracket directions present
  bool non_umbilic_samples_ok = false;    // some coefficient is nonzero at sampled other points
};

/// Directions of the umbilic points at infinity. Zeros of fn always; where fn has a repeated
/// real factor, or where |Hess fn| and the bracket share a real factor, those directions too.
/// Hf, certificates and the flat-point check are filled in; indices are not.
InfinitySearch infinity_umbilics(const BiPoly& f);

HfAtInfinity hf_at_infinity(const BiPoly& f, const LinearFactor& dir);

LemonCertificate lemon_certificate(const BiPoly& f, const LinearFactor& dir, bool hypotheses);

/// Index at the equator point (cos theta, sin theta, 0), from an exact Pythagorean chart
/// within 1e-12 of theta, at radius r and r/2 around the chart origin.
CertifiedIndex infinity_index(const ExtendedForm& ext, double theta, double radius, int samples);

/// Winding radius at the equator point theta: min(0.05, a quarter of the chart distance to
/// the other equator umbilics and the finite umbilics).
double infinity_radius(double theta, const std::vector<double>& other_thetas,
                       const std::vector<UmbilicPoint>& finite);

/// Fills in both indices and the type of every umbilic at infinity.
void compute_infinity_indices(const BiPoly& f, InfinitySearch& search, const std::vector<UmbilicPoint>& finite,
                              int samples);

struct CountBounds {
  bool applicable = false;  // fn has no repeated real factor
  bool compact = false;     // |Hess fn| has no real linear factor and is not identically zero
  int count = 0;            // equator points
  int bound = 0;            // 2n when compact, 2n - 4 otherwise
  bool ok = false;
};

CountBounds count_bounds(const BiPoly& f, const InfinitySearch& search);

/// 2 * (sum of finite indices) + sum of equator indices, in halves; 4 means chi(S^2) = 2.
struct SphereBalance {
  bool applicable = false;  // every index involved is certified
  int finite_halves = 0;
  int equator_halves = 0;
  int total_halves = 0;
  bool closes = false;
};

SphereBalance sphere_balance(const std::vector<UmbilicPoint>& finite, const InfinitySearch& search);

}  // namespace umbilic
