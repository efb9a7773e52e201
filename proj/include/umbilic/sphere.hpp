#pragma once

#include <array>
#include <string>

#include "umbilic/poly.hpp"

namespace umbilic {

/// F(u, v, w) = sum w^(n-i) f_i(u, v).
TriPoly build_F(const BiPoly& f);

/// Coefficients of the analytic extension of the principal form to the sphere:
///   w A du^2 + w B du dv + w C dv^2 - (2uA + vB) du dw - (uB + 2vC) dv dw + T dw^2.
/// A, B, C are homogeneous of degree 3n - 4 and T of degree 3n - 3.
struct ExtendedForm {
  TriPoly A;
  TriPoly B;
  TriPoly C;
  TriPoly T;   // (u^2 A + u v B + v^2 C) / w
  TriPoly T1;  // T - T(u, v, 0)
  int n = 0;
};

/// Throws DomainError when deg f < 2, InternalError if w does not divide u^2A + uvB + v^2C.
ExtendedForm extended_form(const BiPoly& f);

/// Chart of the sphere around the equator direction (cos t, sin t, 0), parametrized by
/// (s, w) -> (cos t - s sin t, sin t + s cos t, w). The axis charts are t = 0 (u+),
/// pi/2 (v+), pi (u-), 3pi/2 (v-).
struct Chart {
  std::string id;     // "u+", "u-", "v+", "v-" or "rot:<degrees>"
  Rational cos_t;     // exact when `exact`
  Rational sin_t;
  double theta = 0.0;
  bool exact = false;

  static Chart axis(const std::string& id);  // throws DomainError on unknown id
  /// Exact rotation by a Pythagorean pair (c, s) with c^2 + s^2 = 1.
  static Chart pythagorean(const Rational& c, const Rational& s);
  static Chart rotation(double theta);
  /// Parses "u+|u-|v+|v-|rot:<deg>".
  static Chart parse(const std::string& text);
};

/// The field equation in chart coordinates (s, w), stored in the (x, y) slots:
///   w P ds^2 - Q ds dw + S dw^2 = 0.
/// For the chart u+ this is P = C(1, s, w), Q = B(1, s, w) + 2 s C(1, s, w), S = T(1, s, w).
struct ChartForm {
  Chart chart;
  BiPoly P;
  BiPoly Q;
  BiPoly S;
};

/// Exact chart restriction; needs an exact chart (axis or Pythagorean).
ChartForm chart_form(const ExtendedForm& ext, const Chart& chart);

/// Floating evaluation of the chart equation a ds^2 + b ds dw + c dw^2 for any angle.
class NumericChart {
 public:
  NumericChart(const ExtendedForm& ext, double theta);
  /// (a, b, c) at chart point (s, w); `scale` receives a rounding scale of the entries.
  std::array<double, 3> coefficients(double s, double w, double* scale = nullptr) const;
  double theta() const { return theta_; }

 private:
  CompiledPoly<3> A_, B_, C_, T_;
  double theta_;
  double c_, s_;
};

struct EquatorIdentity {
  TriPoly lhs;
  TriPoly rhs;
  bool holds = false;
};

struct EquatorIdentities {
  EquatorIdentity uAvB;  // (uA + vB/2)|_{w=0} = -n/(2(n-1)) v fn |Hess fn|
  EquatorIdentity uBvC;  // (uB/2 + vC)|_{w=0} = +n/(2(n-1)) u fn |Hess fn|
  EquatorIdentity T0;    // T(u,v,0) = n fn (d_u f_{n-1} d_v fn - d_v f_{n-1} d_u fn)
};

EquatorIdentities equator_identities(const ExtendedForm& ext, const BiPoly& f);

/// Every exact identity of the construction, checked with rational arithmetic.
struct IdentityReport {
  bool euler = false;               // i f_i = x d_x f_i + y d_y f_i for every part
  bool omega_divisibility = false;  // w | u^2 A + u v B + v^2 C
  bool equator_uAvB = false;
  bool equator_uBvC = false;
  bool equator_T = false;
  bool hf_restriction = false;      // Hf(x, y, 0) = |Hess fn| and Hf(x, y, 1) = |Hess f|
  bool hessian_degree = false;      // deg |Hess f| <= 2n - 4
  bool homogeneity = false;         // A, B, C of degree 3n - 4 and T of degree 3n - 3
  bool all() const {
    return euler && omega_divisibility && equator_uAvB && equator_uBvC && equator_T &&
           hf_restriction && hessian_degree && homogeneity;
  }
};

IdentityReport check_identities(const BiPoly& f);

struct SpherePoint {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
};

/// Central projection of the plane onto the sphere: sheet 1 is the upper hemisphere,
/// sheet 2 its antipode.
SpherePoint project(double x, double y, int sheet = 1);

}  // namespace umbilic
