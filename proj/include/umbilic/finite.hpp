#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "umbilic/curvature.hpp"
#include "umbilic/linefield.hpp"
#include "umbilic/roots.hpp"

namespace umbilic {

struct Box {
  double xmin = -10, xmax = 10, ymin = -10, ymax = 10;
  bool contains(double x, double y) const { return x >= xmin && x <= xmax && y >= ymin && y <= ymax; }
  Box scaled(double k) const { return {xmin * k, xmax * k, ymin * k, ymax * k}; }
};

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kDefaultSamples = 1024;
// The resultants locate umbilics globally, so the box only grows to cover what they find.
inline constexpr double kMaxBoxHalfWidth = 1e6;

struct UmbilicPoint {
  double x = 0.0;
  double y = 0.0;
  std::array<double, 3> residuals{};  // |A|, |B|, |C| at (x, y)
  double relative_residual = 0.0;     // max |value| / (rounding scale + 1)
  int index_halves = 0;
  double winding_radius = 0.0;
  bool certified = false;
  bool isolated_suspect = false;  // Jacobian degenerate and residual flat along its kernel
};

struct FiniteSearch {
  std::vector<UmbilicPoint> points;  // inside `box`, sorted by (x, y)
  Box box;                           // final box after auto-expansion
  int outside = 0;                   // umbilics found beyond the largest box
  bool non_isolated = false;         // suspected curve of umbilics
  std::string pair;                  // coefficient pair used for elimination
  int resultant_degree = 0;
};

/// Floating sampler of the principal form in the plane. Coefficients are assembled from the
/// partials of f rather than from the expanded A, B, C, which cancel badly far out.
FormSampler plane_sampler(const PrincipalForm& form);

/// All finite umbilics: real x-roots of an exact resultant, fibre roots, Gauss-Newton
/// refinement on (A, B, C), acceptance at relative residual below tol, merging within 10 tol.
/// The box starts at `box`, doubling until it holds every umbilic found.
FiniteSearch find_finite_umbilics(const PrincipalForm& form, const Box& box = {},
                                  double tol = kDefaultTol, int samples = kDefaultSamples,
                                  bool auto_expand = true);

/// Null direction of the given branch (1 or 2) at (x, y). With `prev` the root closest to it
/// modulo pi is returned; otherwise branch 1 is the smaller angle in [0, pi).
/// Throws DomainError at an umbilic ("direction undefined").
double direction_at(const PrincipalForm& form, double x, double y, int branch,
                    std::optional<double> prev = std::nullopt);

/// Index of the principal line fields around (cx, cy), in halves.
CertifiedIndex winding_index(const PrincipalForm& form, double cx, double cy, double radius,
                             int samples = kDefaultSamples);

struct Hypotheses {
  bool no_repeated_real_factor = false;  // real linear factors of fn are simple
  bool coprime_real_factors = false;     // n >= 3: no real linear factor of fn divides f_{n-1}
  bool isolated = false;                 // no suspected curve of umbilics
  bool all() const { return no_repeated_real_factor && coprime_real_factors && isolated; }
};

struct PHLedger {
  int n = 0;
  int R = 0;
  LinearFactors factors;
  FiniteSearch finite;
  int sum_halves = 0;
  int rhs_halves = 0;  // 2 - R
  Hypotheses hypotheses;
  bool all_certified = false;
  std::string verdict;  // pass | fail | inconclusive | hypotheses-violated
};

Hypotheses check_hypotheses(const BiPoly& f, const LinearFactors& factors);

/// Sum of finite indices against 1 - R/2.
PHLedger ph_check(const BiPoly& f, const Box& box = {}, double tol = kDefaultTol,
                  int samples = kDefaultSamples);

}  // namespace umbilic
