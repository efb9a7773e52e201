#include <cmath>
#include <numbers>

#include "doctest.h"
#include "umbilic/curvature.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/finite.hpp"
#include "umbilic/loopindex.hpp"
#include "umbilic/parse.hpp"

using namespace umbilic;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

constexpr double kPi = std::numbers::pi;

// Degree of (a - c, b) around a circle from dense sampling (test oracle).
int sampled_degree(const BiPoly& a, const BiPoly& b, const BiPoly& c, double cx, double cy, double r) {
  const CompiledPoly<2> A(a), B(b), C(c);
  const int N = 200000;
  double total = 0, prev = 0;
  for (int k = 0; k <= N; ++k) {
    const double t = 2 * kPi * k / N;
    const double x = cx + r * std::cos(t), y = cy + r * std::sin(t);
    const double ang = std::atan2(B({x, y}), A({x, y}) - C({x, y}));
    if (k > 0) total += std::remainder(ang - prev, 2 * kPi);
    prev = ang;
  }
  return static_cast<int>(std::lround(total / (2 * kPi)));
}

}  // namespace

TEST_CASE("finite umbilic examples") {
  auto s = find_finite_umbilics(principal_form(P("1/2*x^2+1/2*y^2")), Box{-2, 2, -2, 2});
  REQUIRE(s.points.size() == 1);
  CHECK(std::fabs(s.points[0].x) < 1e-9);
  CHECK(std::fabs(s.points[0].y) < 1e-9);
  CHECK(find_finite_umbilics(principal_form(P("x*y"))).points.empty());
  CHECK(find_finite_umbilics(principal_form(P("x^2-y^2"))).points.empty());
}

TEST_CASE("direction examples") {
  const auto pf = principal_form(P("1/2*x^2+1/2*y^2"));
  const double d1 = direction_at(pf, 1, 0, 1);
  const double d2 = direction_at(pf, 1, 0, 2);
  CHECK(d1 == doctest::Approx(0).epsilon(1e-12));
  CHECK(d2 == doctest::Approx(kPi / 2));
  const auto xy = principal_form(P("x*y"));
  CHECK(direction_at(xy, 0, 0, 1) == doctest::Approx(kPi / 4));
  CHECK(direction_at(xy, 0, 0, 2) == doctest::Approx(3 * kPi / 4));
  CHECK_THROWS_AS(direction_at(pf, 0, 0, 1), DomainError);
}

TEST_CASE("branches are orthogonal in the induced metric") {
  const BiPoly f = P("x^3-3*x*y^2+x^2+y^2+x*y");
  const auto pf = principal_form(f);
  const CompiledPoly<2> fx(pf.fx), fy(pf.fy);
  for (const auto& pt : std::vector<std::array<double, 2>>{{0.4, 0.1}, {-1.2, 0.8}, {2.5, -3}}) {
    const double t1 = direction_at(pf, pt[0], pt[1], 1), t2 = direction_at(pf, pt[0], pt[1], 2);
    const double p = fx(pt), q = fy(pt);
    const double E = 1 + p * p, F = p * q, G = 1 + q * q;
    const double a1 = std::cos(t1), b1 = std::sin(t1), a2 = std::cos(t2), b2 = std::sin(t2);
    const double inner = E * a1 * a2 + F * (a1 * b2 + a2 * b1) + G * b1 * b2;
    CHECK(std::fabs(inner) < 1e-9 * std::sqrt((E + G) * (E + G)));
  }
}

TEST_CASE("winding index examples") {
  const auto pf = principal_form(P("1/2*x^2+1/2*y^2"));
  const auto idx = winding_index(pf, 0, 0, 0.5);
  CHECK(idx.certified);
  CHECK(idx.index_halves == 2);
  const auto none = winding_index(principal_form(P("x*y")), 0.3, 0.2, 0.1);
  CHECK(none.certified);
  CHECK(none.index_halves == 0);
}

TEST_CASE("exact loop index against a sampled oracle") {
  struct Case {
    const char* f;
    double cx, cy, r;
  };
  for (const Case& c : {Case{"x^2+y^2", 0, 0, 0.3}, Case{"x^3-3*x*y^2+x^2+y^2", 0, 0, 0.2},
                        Case{"x^3-3*x*y^2+x^2+y^2", 0.5, 0.5, 0.1}, Case{"x^4+y^4-4*x*y+x", 0.1, 0.2, 1.5}}) {
    const auto pf = principal_form(P(c.f));
    const auto exact = exact_loop_index(pf.A, pf.B, pf.C, Rational(c.cx), Rational(c.cy), Rational(c.r));
    REQUIRE(exact);
    CHECK(*exact == sampled_degree(pf.A, pf.B, pf.C, c.cx, c.cy, c.r));
  }
  const auto pf = principal_form(P("x^2+y^2"));
  CHECK(!exact_loop_index(pf.A, pf.B, pf.C, Rational(1), Rational(0), Rational(1)));  // passes the umbilic
}

TEST_CASE("index ledger examples") {
  auto L = ph_check(P("x^2+y^2"));
  CHECK(L.R == 0);
  CHECK(L.sum_halves == 2);
  CHECK(L.verdict == "pass");
  L = ph_check(P("x*y"));
  CHECK(L.R == 2);
  CHECK(L.finite.points.empty());
  CHECK(L.verdict == "pass");
  L = ph_check(P("x^3-3*x*y^2+x^2+y^2"));
  CHECK(L.R == 3);
  CHECK(L.sum_halves == -1);
  CHECK(L.verdict == "pass");
  L = ph_check(P("(x+y)^2*x+y"));
  CHECK(L.verdict == "hypotheses-violated");
}

TEST_CASE("umbilics do not depend on the starting box") {
  const auto pf = principal_form(P("x^4+y^4-4*x*y+x"));
  const auto a = find_finite_umbilics(pf, Box{-1, 1, -1, 1});
  const auto b = find_finite_umbilics(pf, Box{-40, 40, -40, 40});
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].x == doctest::Approx(b.points[i].x));
    CHECK(a.points[i].y == doctest::Approx(b.points[i].y));
    CHECK(a.points[i].index_halves == b.points[i].index_halves);
  }
}
