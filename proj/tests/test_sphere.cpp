#include <cmath>
#include <random>

#include "doctest.h"
#include "umbilic/curvature.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/linefield.hpp"
#include "umbilic/parse.hpp"
#include "umbilic/sphere.hpp"

using namespace umbilic;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }
TriPoly T(const char* s) { return parse_tripoly(s); }

BiPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-3, 3);
  BiPoly f;
  for (int d = 0; d <= degree; ++d) {
    for (int i = 0; i <= d; ++i) f.add_term({i, d - i}, Rational(coef(rng)));
  }
  return f;
}

bool homogeneous_of(const TriPoly& p, int d) {
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] + e[2] != d) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build F") {
  CHECK(build_F(P("x*y")) == T("u*v"));
  CHECK(build_F(P("x^2+y^2+1")) == T("u^2+v^2+w^2"));
  CHECK(build_F(P("x^3-3*x*y^2+x^2+y^2")) == T("u^3-3*u*v^2+w*(u^2+v^2)"));
}

TEST_CASE("extended form of xy by direct substitution") {
  // F = uv: F_u = v, F_v = u, F_uu = F_vv = 0, F_uv = 1, w^{2(n-1)} = w^2.
  const auto ext = extended_form(P("x*y"));
  CHECK(ext.A == T("v^2+w^2"));
  CHECK(ext.B == TriPoly());
  CHECK(ext.C == T("-u^2-w^2"));
  CHECK(ext.T == T("w*(u^2-v^2)"));
  CHECK(ext.T.restrict(kW, Rational(0)).is_zero());
}

TEST_CASE("chart u+ of xy") {
  const auto cf = chart_form(extended_form(P("x*y")), Chart::axis("u+"));
  CHECK(cf.P == P("-1-y^2"));
  CHECK(cf.Q == P("-2*x*(1+y^2)"));
  CHECK(cf.S == P("y*(1-x^2)"));
  CHECK(cf.Q.restrict(kY, Rational(0)) == P("-2*x"));
}

TEST_CASE("equator identities examples") {
  const BiPoly f = P("x*y");
  auto id = equator_identities(extended_form(f), f);
  CHECK(id.uBvC.holds);
  CHECK(id.uBvC.lhs == T("-u^2*v"));
  const BiPoly g = P("x^2+y^2");
  id = equator_identities(extended_form(g), g);
  CHECK(id.uBvC.holds);
  CHECK(id.uBvC.lhs == T("4*u*(u^2+v^2)"));
  const BiPoly h = P("(2*x-y)^3+x");
  id = equator_identities(extended_form(h), h);
  CHECK(id.uAvB.lhs.is_zero());
  CHECK(id.uBvC.lhs.is_zero());
}

TEST_CASE("identities on random polynomials") {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 8; ++n) {
    const BiPoly f = random_poly(rng, n);
    if (f.degree() < 2) continue;
    const auto ext = extended_form(f);
    const int m = f.degree();
    const TriPoly u = TriPoly::variable(kU), v = TriPoly::variable(kV), w = TriPoly::variable(kW);
    CHECK(u * u * ext.A + u * v * ext.B + v * v * ext.C == w * ext.T);
    CHECK(homogeneous_of(ext.A, 3 * m - 4));
    CHECK(homogeneous_of(ext.B, 3 * m - 4));
    CHECK(homogeneous_of(ext.C, 3 * m - 4));
    CHECK(homogeneous_of(ext.T, 3 * m - 3));
    CHECK(check_identities(f).all());
  }
}

TEST_CASE("chart form pulls back to the plane form") {
  // x = 1/w, y = s/w in the chart u+: (ds, dw) maps to (-dw/w^2, ds/w - s dw/w^2).
  const BiPoly f = P("x^3-3*x*y^2+x^2+y^2+2*x*y+5*y");
  const auto pf = principal_form(f);
  const auto cf = chart_form(extended_form(f), Chart::axis("u+"));
  const CompiledPoly<2> A(pf.A), B(pf.B), C(pf.C), Pc(cf.P), Qc(cf.Q), Sc(cf.S);
  for (const auto& pt : std::vector<std::array<double, 2>>{{0.3, 0.4}, {-0.7, 0.2}, {1.1, -0.5}}) {
    const double s = pt[0], w = pt[1];
    const auto d = null_directions(w * Pc({s, w}), -Qc({s, w}), Sc({s, w}));
    REQUIRE(d);
    const double x = 1 / w, y = s / w;
    for (double th : {d->first, d->second}) {
      const double ds = std::cos(th), dw = std::sin(th);
      const double dx = -dw / (w * w), dy = ds / w - s * dw / (w * w);
      const double norm = std::hypot(dx, dy);
      const double a = A({x, y}), b = B({x, y}), c = C({x, y});
      const double val = (a * dx * dx + b * dx * dy + c * dy * dy) / (norm * norm);
      CHECK(std::fabs(val) < 1e-8 * (std::fabs(a) + std::fabs(b) + std::fabs(c)));
    }
  }
}

TEST_CASE("rotated charts agree with the axis charts") {
  const auto ext = extended_form(P("x^3-3*x*y^2+x^2+y^2"));
  const auto exact = chart_form(ext, Chart::axis("v+"));
  const CompiledPoly<2> Pc(exact.P), Qc(exact.Q), Sc(exact.S);
  const NumericChart numeric(ext, Chart::axis("v+").theta);
  for (double s : {-0.4, 0.1, 0.7}) {
    for (double w : {-0.3, 0.2}) {
      const auto c = numeric.coefficients(s, w);
      CHECK(c[0] == doctest::Approx(w * Pc({s, w})).epsilon(1e-12));
      CHECK(c[1] == doctest::Approx(-Qc({s, w})).epsilon(1e-12));
      CHECK(c[2] == doctest::Approx(Sc({s, w})).epsilon(1e-12));
    }
  }
}

TEST_CASE("projection") {
  auto p = project(0, 0);
  CHECK(p.w == doctest::Approx(1));
  p = project(1, 0);
  CHECK(p.u == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(p.w == doctest::Approx(1 / std::sqrt(2.0)));
  const auto q = project(0.3, -2, 2);
  const auto r = project(0.3, -2, 1);
  CHECK(q.u == doctest::Approx(-r.u));
  CHECK(q.v == doctest::Approx(-r.v));
  CHECK(q.w == doctest::Approx(-r.w));
  CHECK(std::fabs(q.u * q.u + q.v * q.v + q.w * q.w - 1) < 1e-12);
}
