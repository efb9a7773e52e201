#include <cmath>
#include <random>

#include "doctest.h"
#include "umbilic/errors.hpp"
#include "umbilic/parse.hpp"
#include "umbilic/resultant.hpp"
#include "umbilic/roots.hpp"

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

// Sylvester determinant by fraction-free cofactor expansion over BiPoly (test oracle).
BiPoly det_oracle(std::vector<std::vector<BiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BiPoly sum;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<BiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BiPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    BiPoly term = m[0][j] * det_oracle(minor);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

BiPoly sylvester_oracle(const BiPoly& f, const BiPoly& g) {
  const int m = f.degree_in(kY);
  const int n = g.degree_in(kY);
  auto coeffs = [](const BiPoly& p, int d) {
    std::vector<BiPoly> c(static_cast<std::size_t>(d + 1));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(d - e[kY])].add_term({e[kX], 0}, v);
    return c;
  };
  const auto fc = coeffs(f, m);
  const auto gc = coeffs(g, n);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<BiPoly>> mat(size, std::vector<BiPoly>(size));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = fc[static_cast<std::size_t>(i)];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = gc[static_cast<std::size_t>(i)];
  }
  return det_oracle(mat);
}

// Counts sign changes of p on a fine grid (numeric oracle for simple roots).
int grid_sign_changes(const UPoly& p, double lo, double hi, int steps) {
  std::vector<double> c;
  for (const auto& v : p.coeffs()) c.push_back(v.get_d());
  auto eval = [&c](double x) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  int changes = 0;
  double prev = eval(lo);
  for (int i = 1; i <= steps; ++i) {
    const double x = lo + (hi - lo) * i / steps;
    const double v = eval(x);
    if ((prev < 0 && v > 0) || (prev > 0 && v < 0)) ++changes;
    if (v != 0) prev = v;
  }
  return changes;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(P("x^2 + y^2") == BiPoly::from_terms({{{2, 0}, 1}, {{0, 2}, 1}}));
  CHECK(P("x*y - 3") == BiPoly::from_terms({{{1, 1}, 1}, {{0, 0}, -3}}));
  CHECK(P("x^3 - 3*x*y^2") == BiPoly::from_terms({{{3, 0}, 1}, {{1, 2}, -3}}));
  CHECK(P("-7/2*x + (x+y)^2 - x^2 - y^2") == BiPoly::from_terms({{{1, 0}, Rational(-7, 2)}, {{1, 1}, 2}}));
  CHECK(P("-x^2") == BiPoly::from_terms({{{2, 0}, -1}}));
  CHECK(P("2*3^2") == BiPoly::constant(18));
  CHECK(parse_tripoly("u*w - v") == TriPoly::from_terms({{{1, 0, 1}, 1}, {{0, 1, 0}, -1}}));
}

TEST_CASE("parse errors carry positions") {
  auto pos = [](const char* s) {
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("x^^2") == 2);
  CHECK(pos("x y") == 2);
  CHECK(pos("2x") == 1);
  CHECK(pos("x + z") == 4);
  CHECK(pos("x^-1") == 2);
  CHECK(pos("x^(2)") == 2);
  CHECK(pos("x^1/2") == 2);
  CHECK(pos("(x+y") == 4);
  CHECK(pos("") == 0);
  CHECK(pos("1/0") == 2);
  CHECK(pos("x^2^3") == 3);
}

TEST_CASE("print then parse round trip") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    Rational scale(1 + k % 3, 1 + k % 5);
    scale.canonicalize();
    BiPoly f = random_poly(rng, 1 + k % 8) * scale;
    CHECK(parse_poly(to_string(f)) == f);
  }
  CHECK(parse_poly(to_string(BiPoly())) == BiPoly());
}

TEST_CASE("homogeneous decomposition and Euler") {
  const auto parts = homogeneous_decompose(P("x^3 - 3*x*y^2 + x^2 + y^2"));
  REQUIRE(parts.size() == 4);
  CHECK(parts[3] == P("x^3 - 3*x*y^2"));
  CHECK(parts[2] == P("x^2 + y^2"));
  CHECK(parts[1].is_zero());
  CHECK(parts[0].is_zero());
  CHECK(homogeneous_decompose(BiPoly()).empty());
  const auto p2 = homogeneous_decompose(P("x*y + x"));
  CHECK(p2[2] == P("x*y"));
  CHECK(p2[1] == P("x"));

  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    const BiPoly f = random_poly(rng, 1 + k % 8);
    const auto fs = homogeneous_decompose(f);
    BiPoly sum;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      sum += fs[i];
      const BiPoly euler = P("x") * fs[i].partial(kX) + P("y") * fs[i].partial(kY);
      CHECK(euler == fs[i] * Rational(static_cast<long>(i)));
    }
    CHECK(sum == f);
  }
}

TEST_CASE("partials") {
  CHECK(P("x^2 + y^2").partial(kX) == P("2*x"));
  CHECK(P("x*y").partial(kX).partial(kY) == P("1"));
  CHECK(parse_tripoly("u^3 - 3*u*v^2").partial(kU, 2) == parse_tripoly("6*u"));
}

TEST_CASE("resultant convention and oracle") {
  CHECK(resultant(P("y - x"), P("y + x"), kY) == P("2*x"));
  CHECK(resultant(P("x*y - 1"), P("y"), kY) == P("1"));
  CHECK(resultant(P("x*y + y^2 - 3"), P("x*y + y^2 - 3"), kY).is_zero());
  CHECK_THROWS_AS(resultant(P("x"), P("x + 1"), kY), DomainError);
  CHECK(resultant(P("1/2*y - x"), P("y + 1/3*x"), kY) == P("7/6*x"));

  std::mt19937_64 rng(3);
  for (int k = 0; k < 12; ++k) {
    const BiPoly f = random_poly(rng, 1 + k % 4) * Rational(1, 1 + k % 3);  // already canonical
    const BiPoly g = random_poly(rng, 1 + (k + 1) % 4);
    if (f.degree_in(kY) < 1 || g.degree_in(kY) < 1) continue;
    CHECK(resultant(f, g, kY) == sylvester_oracle(f, g));
  }
}

TEST_CASE("resultant vanishes iff common factor") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    const BiPoly h = random_poly(rng, 1 + k % 2) + P("y");
    const BiPoly f = h * random_poly(rng, 2);
    const BiPoly g = h * random_poly(rng, 2);
    if (h.degree_in(kY) >= 1) CHECK(resultant(f, g, kY).is_zero());
  }
  CHECK_FALSE(resultant(P("y^2 - x"), P("y - x^2 - 1"), kY).is_zero());
}

TEST_CASE("root isolation") {
  auto roots = isolate_real_roots(P("1 - 3*x^2"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].approx() == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(roots[1].approx() == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(roots[0].hi - roots[0].lo <= pow2(-60));

  roots = isolate_real_roots(P("x^2"));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].exact());
  CHECK(roots[0].lo == 0);
  CHECK(roots[0].multiplicity == 2);

  CHECK(isolate_real_roots(P("x^2 + 1")).empty());
  CHECK_THROWS_AS(isolate_real_roots(BiPoly()), DomainError);

  roots = isolate_real_roots(P("(x - 1/2)^3*(x + 2)*(x^2 - 2)"));
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].approx() == doctest::Approx(-2));
  CHECK(roots[1].approx() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(roots[2].lo == Rational(1, 2));
  CHECK(roots[2].multiplicity == 3);
  CHECK(roots[3].approx() == doctest::Approx(std::sqrt(2.0)));

  // Clustered roots against a fine-grid oracle.
  const UPoly w = UPoly::from_poly(P("(x - 1/1000)*(x - 2/1000)*(x + 1/1000)*(x - 5)*(x^2 + x + 7)"), kX);
  CHECK(isolate_real_roots(w).size() == static_cast<std::size_t>(grid_sign_changes(w, -10, 10, 2000000)));

  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    std::uniform_int_distribution<int> coef(-20, 20);
    std::vector<Rational> c(9);
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    const UPoly p(c);
    if (gcd(p, p.derivative()).degree() > 0) continue;
    CHECK(isolate_real_roots(p).size() == static_cast<std::size_t>(grid_sign_changes(p, -60, 60, 1200000)));
  }
}

TEST_CASE("sign at algebraic root") {
  const UPoly g = UPoly::from_poly(P("x^2 - 2"), kX);
  const auto roots = isolate_real_roots(g);
  REQUIRE(roots.size() == 2);
  const UPoly q = UPoly::from_poly(P("x - 7/5"), kX);
  CHECK(sign_at_root(q, g, roots[1]) == 1);
  CHECK(sign_at_root(q, g, roots[0]) == -1);
  CHECK(sign_at_root(UPoly::from_poly(P("x^3 - 2*x"), kX), g, roots[1]) == 0);
  CHECK(sign_at_root(UPoly::from_poly(P("-x"), kX), g, roots[1]) == -1);
  CHECK(descartes_bound(g, Rational(0), Rational(2)) == 1);
}

TEST_CASE("real linear factors") {
  auto lf = real_linear_factors(P("x^3 - 3*x*y^2"));
  CHECK(lf.R == 3);
  CHECK(lf.all_simple());
  REQUIRE(lf.factors.size() == 3);
  CHECK(lf.factors[0].theta == doctest::Approx(M_PI / 6));
  CHECK(lf.factors[1].theta == doctest::Approx(M_PI / 2));
  CHECK(lf.factors[1].vertical);
  CHECK(lf.factors[2].theta == doctest::Approx(5 * M_PI / 6));
  CHECK(real_linear_factors(P("x^2 + y^2")).R == 0);
  lf = real_linear_factors(P("x*y"));
  CHECK(lf.R == 2);
  CHECK(lf.all_simple());
  lf = real_linear_factors(P("x*y^2"));
  CHECK(lf.R == 2);
  CHECK_FALSE(lf.all_simple());
  lf = real_linear_factors(P("x^2*y"));
  CHECK_FALSE(lf.all_simple());
  CHECK_THROWS_AS(real_linear_factors(P("x^2 + y")), DomainError);
  // All simple iff gcd(fn(1,t), fn'(1,t)) constant and v^2 does not divide fn... with u:
  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    const BiPoly fn = random_poly(rng, 2 + k % 5).homogeneous_part(2 + k % 5);
    if (fn.is_zero()) continue;
    const UPoly g = dehomogenize(fn);
    const bool squarefree_t = gcd(g, g.derivative()).degree() == 0;
    const bool u2 = fn.degree() - g.degree() >= 2;
    const auto f = real_linear_factors(fn);
    if (squarefree_t && !u2) CHECK(f.all_simple());
  }
}
