#include <cmath>
#include <random>

#include "doctest.h"
#include "umbilic/curvature.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/parse.hpp"

using namespace umbilic;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

BiPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-3, 3);
  BiPoly f;
  for (int d = 0; d <= degree; ++d) {
    for (int i = 0; i <= d; ++i) f.add_term({i, d - i}, Rational(coef(rng)));
  }
  return f;
}

TriPoly T(const char* s) { return parse_tripoly(s); }

// Second-order central differences of the double evaluation of f (numeric oracle).
struct Jet {
  double p, q, r, s, t;
};

Jet finite_jet(const BiPoly& f, double x, double y) {
  const CompiledPoly<2> g(f);
  const double h = 1e-4;
  auto F = [&g](double a, double b) { return g({a, b}); };
  return {(F(x + h, y) - F(x - h, y)) / (2 * h), (F(x, y + h) - F(x, y - h)) / (2 * h),
          (F(x + h, y) - 2 * F(x, y) + F(x - h, y)) / (h * h),
          (F(x + h, y + h) - F(x + h, y - h) - F(x - h, y + h) + F(x - h, y - h)) / (4 * h * h),
          (F(x, y + h) - 2 * F(x, y) + F(x, y - h)) / (h * h)};
}

}  // namespace

TEST_CASE("principal form examples") {
  auto pf = principal_form(P("1/2*x^2+1/2*y^2"));
  CHECK(pf.A == P("-x*y"));
  CHECK(pf.B == P("x^2-y^2"));
  CHECK(pf.C == P("x*y"));
  pf = principal_form(P("x*y"));
  CHECK(pf.A == P("1+y^2"));
  CHECK(pf.B == BiPoly());
  CHECK(pf.C == P("-1-x^2"));
  pf = principal_form(P("x^2+y^2"));
  // f_x = 2x, f_y = 2y, f_xx = f_yy = 2, f_xy = 0 by hand.
  CHECK(pf.A == P("-8*x*y"));
  CHECK(pf.B == P("8*x^2-8*y^2"));
  CHECK(pf.C == P("8*x*y"));
  CHECK_THROWS_AS(principal_form(P("x+y")), DomainError);
}

TEST_CASE("principal form against the fundamental forms") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pt(-1.5, 1.5);
  for (int n = 2; n <= 5; ++n) {
    const BiPoly f = random_poly(rng, n);
    if (f.degree() < 2) continue;
    const auto pf = principal_form(f);
    const CompiledPoly<2> A(pf.A), B(pf.B), C(pf.C);
    for (int k = 0; k < 5; ++k) {
      const double x = pt(rng), y = pt(rng);
      const Jet j = finite_jet(f, x, y);
      const double E = 1 + j.p * j.p, Fm = j.p * j.q, G = 1 + j.q * j.q;
      const double W = std::sqrt(1 + j.p * j.p + j.q * j.q);
      const double e = j.r / W, m = j.s / W, g = j.t / W;
      // E m - F e, E g - G e, F g - G m are the principal form divided by W.
      const double scale = 1 + std::fabs(A({x, y})) + std::fabs(B({x, y})) + std::fabs(C({x, y}));
      CHECK(std::fabs((E * m - Fm * e) * W - A({x, y})) < 1e-4 * scale);
      CHECK(std::fabs((E * g - G * e) * W - B({x, y})) < 1e-4 * scale);
      CHECK(std::fabs((Fm * g - G * m) * W - C({x, y})) < 1e-4 * scale);
    }
  }
}

TEST_CASE("hessian determinant") {
  CHECK(hessian_det(P("x^2+y^2")) == BiPoly::constant(4));
  CHECK(hessian_det(P("x*y")) == BiPoly::constant(-1));
  CHECK(hessian_det(P("x^3-3*x*y^2")) == P("-36*x^2-36*y^2"));
  CHECK(hessian_det(P("(2*x-3*y)^4")).is_zero());
  CHECK(!hessian_det(P("x*y*(x-y)")).is_zero());
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 8; ++n) {
    const BiPoly f = random_poly(rng, n);
    CHECK(hessian_det(f).degree() <= 2 * f.degree() - 4);
  }
}

TEST_CASE("projective hessian restrictions") {
  auto h = homogenize_hessian(P("x*y"));
  CHECK(h.Hf == TriPoly::constant(-1));
  h = homogenize_hessian(P("x^3-3*x*y^2+x^2+y^2"));
  CHECK(h.Hf.restrict(kW, Rational(0)) == T("-36*u^2-36*v^2"));
  CHECK_THROWS_AS(homogenize_hessian(P("x^2")), DomainError);
  std::mt19937_64 rng(13);
  for (int n = 3; n <= 8; ++n) {
    const BiPoly f = random_poly(rng, n);
    if (f.degree() < 2 || hessian_det(f).is_zero()) continue;
    const auto H = homogenize_hessian(f);
    const BiPoly hess = hessian_det(f);
    const BiPoly hn = hessian_det(f.homogeneous_part(f.degree()));
    const TriPoly lift_h = embed<2, 3>(hess, {kU, kV});
    const TriPoly lift_hn = embed<2, 3>(hn, {kU, kV});
    CHECK(H.Hf.restrict(kW, Rational(1)) == lift_h);
    CHECK(H.Hf.restrict(kW, Rational(0)) == lift_hn);
  }
}

TEST_CASE("point classification") {
  CHECK(classify_point(P("x^2+y^2"), 0, 0) == PointClass::Elliptic);
  CHECK(classify_point(P("x*y"), 1, 1) == PointClass::Hyperbolic);
  CHECK(classify_point(P("x^3"), 0, 0) == PointClass::Parabolic);
}

TEST_CASE("form type") {
  CHECK(classify_form_type(P("x^2+y^2")).type == FormType::Elliptic);
  CHECK(classify_form_type(P("x*y")).type == FormType::Hyperbolic);
  const auto sq = classify_form_type(P("x^2"));
  CHECK(sq.type == FormType::Neither);
  CHECK(sq.power_of_linear_form);
  CHECK(classify_form_type(P("x^3-3*x*y^2")).type == FormType::Hyperbolic);
}
