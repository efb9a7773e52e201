#include "umbilic/loopindex.hpp"

#include <array>
#include <vector>

#include "umbilic/errors.hpp"
#include "umbilic/roots.hpp"
#include "umbilic/upoly.hpp"

namespace umbilic {

namespace {

UPoly power(const UPoly& p, int k, std::vector<UPoly>& cache) {
  if (cache.empty()) cache.push_back(UPoly::constant(Rational(1)));
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * p);
  return cache[static_cast<std::size_t>(k)];
}

// W^d p(X/W, Y/W) for total degree bound d.
UPoly substitute(const BiPoly& p, int d, const UPoly& X, const UPoly& Y, const UPoly& W) {
  std::vector<UPoly> xs, ys, ws;
  UPoly out;
  for (const auto& [e, coef] : p.terms()) {
    out += power(X, e[kX], xs) * power(Y, e[kY], ys) * power(W, d - e[kX] - e[kY], ws) * coef;
  }
  return out;
}

// Sign of p just to the right of the exact root r of multiplicity m.
int sign_after(const UPoly& p, const Rational& r, int m) {
  UPoly q = p;
  for (int i = 0; i < m; ++i) q = q.derivative();
  return sign(q.evaluate(r));
}

}  // namespace

std::optional<int> exact_loop_index(const BiPoly& a, const BiPoly& b, const BiPoly& c, const Rational& cx,
                                    const Rational& cy, const Rational& radius) {
  if (!(radius > 0)) throw DomainError("loop radius must be positive");
  const BiPoly u = a - c;
  const BiPoly& v = b;
  if (u.is_zero() && v.is_zero()) return std::nullopt;
  const int d = std::max(u.degree(), v.degree());
  const UPoly t = UPoly::identity();
  const UPoly one = UPoly::constant(Rational(1));
  const UPoly W = one + t * t;
  const UPoly cosp = one - t * t;  // (1 - t^2) / W = cos(phi), 2t / W = sin(phi), t = tan(phi / 2)
  const UPoly sinp = t * Rational(2);

  // Rotating the parametrization moves the point t = infinity; pick one where b is nonzero.
  // Pythagorean triples give exact rotations.
  const std::array<std::array<int, 3>, 6> rotations{{{1, 0, 1}, {3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}}};
  for (const auto& [p, q, h] : rotations) {
    Rational ca(p, h), sa(q, h);
    ca.canonicalize();
    sa.canonicalize();
    const UPoly X = W * cx + (cosp * ca - sinp * sa) * radius;
    const UPoly Y = W * cy + (cosp * sa + sinp * ca) * radius;
    const UPoly U = substitute(u, d, X, Y, W);
    const UPoly V = substitute(v, d, X, Y, W);
    if (V.is_zero()) {
      if (U.is_zero()) return std::nullopt;
      return 0;  // b vanishes on the whole loop: the vector keeps the line of (a - c, 0)
    }
    if (V.degree() != 2 * d) continue;
    if (!U.is_zero()) {
      const UPoly g = gcd(U, V);
      if (g.degree() >= 1 && !isolate_real_roots(g).empty()) return std::nullopt;
    } else {
      return std::nullopt;  // U vanishes identically, so the loop meets the zeros of V
    }
    const UPoly V_sqf = exact_div(V, gcd(V, V.derivative()));
    int twice = 0;
    for (const auto& root : isolate_real_roots(V)) {
      if (root.multiplicity % 2 == 0) continue;
      int su = 0;
      int dir = 0;
      if (root.exact()) {
        su = sign(U.evaluate(root.lo));
        dir = sign_after(V, root.lo, root.multiplicity);
      } else {
        su = sign_at_root(U, V_sqf, root);
        dir = sign(V.evaluate(root.hi));
      }
      twice += su * dir;
    }
    if (twice % 2 != 0) throw InternalError("odd Cauchy index on a closed loop");
    return twice / 2;
  }
  throw InternalError("no admissible loop parametrization");
}

CertifiedIndex loop_index(const BiPoly& a, const BiPoly& b, const BiPoly& c, const FormSampler& sampler, double cx,
                          double cy, double radius, int samples) {
  const Rational x(cx), y(cy), r(radius);
  const auto outer = exact_loop_index(a, b, c, x, y, r);
  const auto inner = exact_loop_index(a, b, c, x, y, r / 2);
  if (outer && inner) {
    CertifiedIndex out;
    out.index_halves = *outer;
    out.certified = *outer == *inner;
    out.exact = true;
    out.radius = radius;
    return out;
  }
  return certified_index(sampler, cx, cy, radius, samples);
}

}  // namespace umbilic
