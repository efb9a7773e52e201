#include "umbilic/curvature.hpp"

#include <cmath>

#include "umbilic/errors.hpp"
#include "umbilic/roots.hpp"

namespace umbilic {

PrincipalForm principal_form(const BiPoly& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("principal form needs a polynomial of degree at least 2");
  const BiPoly one = BiPoly::constant(Rational(1));
  const BiPoly p = f.partial(kX);
  const BiPoly q = f.partial(kY);
  const BiPoly r = p.partial(kX);
  const BiPoly s = p.partial(kY);
  const BiPoly t = q.partial(kY);
  const BiPoly E = one + p * p;
  const BiPoly G = one + q * q;
  PrincipalForm form;
  form.A = s * E - p * q * r;
  form.B = t * E - r * G;
  form.C = p * q * t - s * G;
  form.fx = p;
  form.fy = q;
  form.n = n;
  return form;
}

BiPoly hessian_det(const BiPoly& f) {
  return f.partial(kX, 2) * f.partial(kY, 2) - f.partial(kX).partial(kY).pow(2);
}

ProjectiveHessian homogenize_hessian(const BiPoly& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("Hessian curve needs a polynomial of degree at least 2");
  const BiPoly h = hessian_det(f);
  if (h.is_zero()) throw DomainError("Hessian function vanishes identically");
  const int target = 2 * n - 4;
  ProjectiveHessian out;
  out.n = n;
  for (const auto& [e, c] : h.terms()) {
    const int pad = target - (e[kX] + e[kY]);
    if (pad < 0) throw InternalError("Hessian degree exceeds 2n - 4");
    out.Hf.add_term({e[kX], e[kY], pad}, c);
  }
  return out;
}

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::Elliptic: return "elliptic";
    case PointClass::Parabolic: return "parabolic";
    case PointClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

const char* to_string(FormType t) {
  switch (t) {
    case FormType::Elliptic: return "elliptic";
    case FormType::Hyperbolic: return "hyperbolic";
    case FormType::Neither: return "neither";
  }
  return "?";
}

PointClass classify_point(const BiPoly& f, double x, double y) {
  const BiPoly h = hessian_det(f);
  const double value = CompiledPoly<2>(h)({x, y});
  const double eps = 1e-10 * (1.0 + max_coefficient_magnitude(h));
  if (std::fabs(value) <= eps) return PointClass::Parabolic;
  return value > 0 ? PointClass::Elliptic : PointClass::Hyperbolic;
}

FormTypeResult classify_form_type(const BiPoly& fn) {
  if (!fn.is_homogeneous() || fn.degree() < 2) {
    throw DomainError("form type needs a homogeneous polynomial of degree at least 2");
  }
  FormTypeResult out;
  const BiPoly h = hessian_det(fn);
  if (h.is_zero()) {
    out.power_of_linear_form = true;
    return out;
  }
  if (h.degree() > 0 && real_linear_factors(h).R > 0) return out;
  // No real linear factor: the sign is constant off the origin; u does not divide h.
  const int s = sign(h.evaluate(std::array<Rational, 2>{Rational(1), Rational(0)}));
  out.type = s > 0 ? FormType::Elliptic : FormType::Hyperbolic;
  return out;
}

}  // namespace umbilic
