#include <cmath>
#include <numbers>

#include "doctest.h"
#include "umbilic/finite.hpp"
#include "umbilic/infinity.hpp"
#include "umbilic/parse.hpp"

using namespace umbilic;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

constexpr double kPi = std::numbers::pi;

InfinitySearch full(const BiPoly& f) {
  InfinitySearch s = infinity_umbilics(f);
  compute_infinity_indices(f, s, ph_check(f).finite.points, kDefaultSamples);
  return s;
}

Rational exact(const AlgebraicValue& v) {
  REQUIRE(v.exact);
  return *v.exact;
}

}  // namespace

TEST_CASE("directions at infinity") {
  auto s = infinity_umbilics(P("x*y"));
  REQUIRE(s.umbilics.size() == 2);
  CHECK(s.umbilics[0].theta == doctest::Approx(0));
  CHECK(s.umbilics[1].theta == doctest::Approx(kPi / 2));
  CHECK(infinity_umbilics(P("x^2+y^2")).umbilics.empty());
  s = infinity_umbilics(P("x^3-3*x*y^2+x^2+y^2"));
  REQUIRE(s.umbilics.size() == 3);
  CHECK(s.umbilics[0].theta == doctest::Approx(kPi / 6));
  CHECK(s.umbilics[1].theta == doctest::Approx(kPi / 2));
  CHECK(s.umbilics[2].theta == doctest::Approx(5 * kPi / 6));
  for (const auto& p : s.umbilics) CHECK(p.flat);
  CHECK(s.non_umbilic_samples_ok);
}

TEST_CASE("repeated factor falls back to the general criterion") {
  const auto s = infinity_umbilics(P("(x-y)^2*(x+y)+x^2"));
  CHECK(s.repeated_factor);
  for (const auto& p : s.umbilics) CHECK(p.type == "Uncertified");
}

TEST_CASE("Hf at infinity") {
  const auto s = infinity_umbilics(P("x*y"));
  const auto hf = s.umbilics[1].hf;  // factor u, direction (0, 1)
  CHECK(hf.matches);
  CHECK(hf.certified);
  CHECK(exact(hf.closed_form) == -1);
  CHECK(hf.unit_value == doctest::Approx(-1));
  const auto r = infinity_umbilics(P("x^3-3*x*y^2+x^2+y^2"));
  for (const auto& p : r.umbilics) {
    CHECK(p.hf.matches);
    CHECK(p.hf.sign < 0);
    CHECK(p.hf.unit_value == doctest::Approx(-36));
  }
  const auto sq = hf_at_infinity(P("(x+2*y)^2+x"), real_linear_factors(P("(x+2*y)^2")).factors[0]);
  CHECK(sq.sign == 0);
  CHECK(!sq.certified);
}

TEST_CASE("n = 2 certificate matches the closed forms") {
  // f = b0 y + b1 x + y (a0 y + a1 x) at the direction y = 0.
  const Rational a1 = 3, b1 = 5;
  const BiPoly f = P("-y + 5*x + y*(2*y + 3*x)");
  const auto s = infinity_umbilics(f);
  REQUIRE(s.umbilics.size() == 2);
  const auto& c = s.umbilics[0].certificate;
  CHECK(s.umbilics[0].theta == doctest::Approx(0));
  CHECK(c.applicable);
  CHECK(exact(c.a) == a1);
  CHECK(exact(c.b) == b1);
  CHECK(exact(c.const_C) == -a1 * a1 * a1);
  CHECK(exact(c.lin_B_v) == -2 * a1 * a1 * a1);
  CHECK(exact(c.lin_B_w) == 0);
  CHECK(exact(c.lin_T_v) == 2 * a1 * a1 * b1);
  CHECK(exact(c.lin_T_w) == a1 * (1 + b1 * b1));
  CHECK(c.det_matches);
  CHECK(c.positive_definite);
  CHECK(c.normalized_det == doctest::Approx(64));
  CHECK(c.all());
}

TEST_CASE("n >= 3 certificate against an independent expansion") {
  // Coefficients of C, B + 2vC and T in the chart u = 1 for x^3 - 3xy^2 + x^2 + y^2 at the
  // vertical direction, after (u, v) -> (-v, u); computed with a computer algebra system.
  const auto s = infinity_umbilics(P("x^3-3*x*y^2+x^2+y^2"));
  const auto& c = s.umbilics[1].certificate;
  REQUIRE(s.umbilics[1].direction.vertical);
  CHECK(exact(c.a) == 3);
  CHECK(exact(c.b) == 1);
  CHECK(exact(c.const_C) == -54);
  CHECK(exact(c.lin_B_v) == -54);
  CHECK(exact(c.lin_B_w) == -18);
  CHECK(exact(c.lin_T_v) == 54);
  CHECK(exact(c.lin_T_w) == 12);
  CHECK(c.const_C_matches);
  CHECK(c.lin_T_matches);
  CHECK(c.lin_B_w_corrected);
  CHECK(!c.lin_B_matches);  // dB/dw is -(n-1)(n-2) a^2 b, not 0
  // With the true linear parts the quadratic part of the discriminant is a perfect square.
  CHECK(c.normalized_det == doctest::Approx(0));
  CHECK(!c.det_matches);
  CHECK(!c.positive_definite);
}

TEST_CASE("n >= 3 certificate on an irrational direction") {
  const auto s = infinity_umbilics(P("x^5+y^5+x*y^3+x^2+3*x*y^4"));
  bool seen = false;
  for (const auto& p : s.umbilics) {
    if (p.source != InfinitySource::LinearFactor) continue;
    seen = true;
    CHECK(!p.certificate.a.exact);
    CHECK(p.hf.matches);
    CHECK(p.certificate.const_C_matches);
    CHECK(p.certificate.lin_T_matches);
    CHECK(p.certificate.lin_B_w_corrected);
  }
  CHECK(seen);
}

TEST_CASE("indices at infinity") {
  for (const char* text : {"x*y", "x^2-y^2"}) {
    const auto s = full(P(text));
    REQUIRE(s.umbilics.size() == 2);
    for (const auto& p : s.umbilics) {
      for (const auto& idx : p.index) {
        CHECK(idx.certified);
        CHECK(idx.index_halves == 1);
      }
      CHECK(p.type == "Lemon");
    }
    const auto b = sphere_balance({}, s);
    CHECK(b.applicable);
    CHECK(b.total_halves == 4);
  }
  const auto s = full(P("x^3-3*x*y^2+x^2+y^2"));
  for (const auto& p : s.umbilics) {
    CHECK(p.index[0].index_halves == 1);
    CHECK(p.index[1].index_halves == 1);
  }
}

TEST_CASE("count bounds") {
  const BiPoly quartic = P("x*y*(x-y)*(x+2*y)+x^2+y^3");
  auto c = count_bounds(quartic, infinity_umbilics(quartic));
  CHECK(c.compact);
  CHECK(c.count == 8);
  CHECK(c.ok);
  const BiPoly cubic = P("x^3-3*x*y^2+x^2+y^2");
  c = count_bounds(cubic, infinity_umbilics(cubic));
  CHECK(c.compact);
  CHECK(c.count == 6);
  CHECK(c.bound == 6);
  const BiPoly round = P("x^2+y^2");
  c = count_bounds(round, infinity_umbilics(round));
  CHECK(c.count == 0);
}

TEST_CASE("sphere balance with hessian-bracket points") {
  const BiPoly f = P("x^3+2*x*y^2+3*x^2+x*y+2*y^2-x+3*y-2");
  const auto L = ph_check(f);
  auto s = infinity_umbilics(f);
  compute_infinity_indices(f, s, L.finite.points, kDefaultSamples);
  CHECK(s.bracket_directions);
  const auto b = sphere_balance(L.finite.points, s);
  CHECK(b.applicable);
  CHECK(b.total_halves == 4);
}
