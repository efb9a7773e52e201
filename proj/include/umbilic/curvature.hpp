#pragma once

#include "umbilic/poly.hpp"

namespace umbilic {

/// The form of principal curvatures Atilde dx^2 + Btilde dx dy + Ctilde dy^2, stored without
/// the positive factor 1/sqrt(1 + f_x^2 + f_y^2). Its null directions are the projections of
/// the principal directions of the graph of f.
struct PrincipalForm {
  BiPoly A;  // f_xy + f_xy f_x^2 - f_x f_y f_xx
  BiPoly B;  // f_yy (1 + f_x^2) - f_xx (1 + f_y^2)
  BiPoly C;  // f_x f_y f_yy - f_xy - f_xy f_y^2
  BiPoly fx;  // first partials, for the induced metric E = 1 + fx^2, F = fx fy, G = 1 + fy^2
  BiPoly fy;
  int n = 0;
};

/// Throws DomainError when deg f < 2.
PrincipalForm principal_form(const BiPoly& f);

/// f_xx f_yy - f_xy^2.
BiPoly hessian_det(const BiPoly& f);

/// Homogenization of |Hess f| to degree 2n - 4 in (x, y, z), stored in the (u, v, w) slots.
struct ProjectiveHessian {
  TriPoly Hf;
  int n = 0;
};

/// Throws DomainError when deg f < 2 or |Hess f| vanishes identically.
ProjectiveHessian homogenize_hessian(const BiPoly& f);

enum class PointClass { Elliptic, Parabolic, Hyperbolic };
enum class FormType { Elliptic, Hyperbolic, Neither };

const char* to_string(PointClass c);
const char* to_string(FormType t);

/// Sign of |Hess f| at p; |value| <= 1e-10 (1 + max |coefficient|) counts as parabolic.
PointClass classify_point(const BiPoly& f, double x, double y);

struct FormTypeResult {
  FormType type = FormType::Neither;
  bool power_of_linear_form = false;  // |Hess fn| vanishes identically
};

/// Hyperbolic (elliptic): |Hess fn| has no real linear factor and is <= 0 (>= 0).
/// Throws DomainError unless fn is homogeneous of degree >= 2.
FormTypeResult classify_form_type(const BiPoly& fn);

}  // namespace umbilic
