#include "umbilic/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "umbilic/errors.hpp"
#include "umbilic/zpoly.hpp"

namespace umbilic {

namespace {

void taylor_shift_one(ZPoly& p) {
  const std::size_t d = p.size() - 1;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = d - 1;; --j) {
      p[j] += p[j + 1];
      if (j == i) break;
    }
  }
}

int sign_variations(const ZPoly& p) {
  int count = 0;
  int last = 0;
  for (const auto& c : p) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

void remove_content(ZPoly& p) {
  const Integer g = content(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Variations of (x+1)^d p(1/(x+1)): bound on the number of roots of p in (0, 1).
int variations_unit(const ZPoly& p) {
  ZPoly r(p.rbegin(), p.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

// Exponent k with every positive root of p below 2^k.
long root_bound_exponent(const ZPoly& p) {
  const std::size_t d = p.size() - 1;
  long exp = 0;
  const double lead = std::log2(std::fabs(mpz_get_d_2exp(&exp, p.back().get_mpz_t()))) + static_cast<double>(exp);
  double best = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (p[i] == 0) continue;
    const double li = std::log2(std::fabs(mpz_get_d_2exp(&exp, p[i].get_mpz_t()))) + static_cast<double>(exp);
    best = std::max(best, (li - lead) / static_cast<double>(d - i));
  }
  return static_cast<long>(std::ceil(best)) + 2;
}

// Positive real roots of a square-free integer polynomial with p(0) != 0.
void isolate_positive(const ZPoly& q, std::vector<RootInterval>& out) {
  if (q.size() < 2) return;
  const long k = root_bound_exponent(q);
  // p(x) = q(2^k x): roots in (0, 1).
  ZPoly p = q;
  for (std::size_t i = 1; i < p.size(); ++i) {
    mpz_mul_2exp(p[i].get_mpz_t(), p[i].get_mpz_t(), static_cast<mp_bitcnt_t>(k * static_cast<long>(i)));
  }
  remove_content(p);
  struct Node {
    ZPoly poly;
    Integer c;
    unsigned long level;
  };
  std::vector<Node> stack;
  stack.push_back({std::move(p), Integer(0), 0});
  auto to_rational = [k](const Integer& c, unsigned long level) -> Rational {
    Rational r(c);
    return r * pow2(k - static_cast<long>(level));
  };
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.poly[0] == 0) {
      // Exact root at the left endpoint.
      const Rational at = to_rational(node.c, node.level);
      out.push_back({at, at, 1});
      node.poly.erase(node.poly.begin());
    }
    if (node.poly.size() < 2) continue;
    const int v = variations_unit(node.poly);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back({to_rational(node.c, node.level), to_rational(node.c + 1, node.level), 1});
      continue;
    }
    // Left half: 2^deg p(x/2); right half: left shifted by one.
    ZPoly left = node.poly;
    const std::size_t dd = left.size() - 1;
    for (std::size_t i = 0; i < dd; ++i) {
      mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), static_cast<mp_bitcnt_t>(dd - i));
    }
    remove_content(left);
    ZPoly right = left;
    taylor_shift_one(right);
    remove_content(right);
    const Integer c2 = node.c * 2;
    stack.push_back({std::move(right), c2 + 1, node.level + 1});
    stack.push_back({std::move(left), c2, node.level + 1});
  }
}

int sign_rational(const ZPoly& p, const Rational& x) { return sign_at(p, x); }

// Makes hi a non-root and narrows to the requested width; root simple, lo not a root.
void refine_interval(const ZPoly& p, RootInterval& r, unsigned long width_bits) {
  if (r.exact()) return;
  const int slo = sign_rational(p, r.lo);
  const Rational width = pow2(-static_cast<long>(width_bits));
  bool hi_ok = sign_rational(p, r.hi) != 0;
  while (!hi_ok || r.hi - r.lo > width) {
    const Rational mid = (r.lo + r.hi) / 2;
    const int sm = sign_rational(p, mid);
    if (sm == 0) {
      r.lo = r.hi = mid;
      return;
    }
    if (sm != slo) {
      r.hi = mid;
      hi_ok = true;
    } else {
      r.lo = mid;
    }
  }
}

RootIntervals isolate_squarefree(const ZPoly& q) {
  RootIntervals roots;
  ZPoly p = q;
  std::size_t zeros = 0;
  while (!p.empty() && p.front() == 0) {
    p.erase(p.begin());
    ++zeros;
  }
  if (zeros > 0) roots.push_back({Rational(0), Rational(0), 1});
  std::vector<RootInterval> pos;
  isolate_positive(p, pos);
  ZPoly neg = p;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  std::vector<RootInterval> negs;
  isolate_positive(neg, negs);
  for (auto& r : negs) {
    Rational lo = -r.hi;
    Rational hi = -r.lo;
    r.lo = lo;
    r.hi = hi;
    // Keep lo a non-root for refinement: a negated interval has its old hi (a possible root) as lo.
    roots.push_back(r);
  }
  for (auto& r : pos) roots.push_back(r);
  for (auto& r : roots) {
    if (r.exact()) continue;
    if (sign_rational(q, r.lo) == 0) {
      // Swap roles by refining from the other side.
      const int shi = sign_rational(q, r.hi);
      while (true) {
        const Rational mid = (r.lo + r.hi) / 2;
        const int sm = sign_rational(q, mid);
        if (sm == 0) {
          r.lo = r.hi = mid;
          break;
        }
        if (sm != shi) {
          r.lo = mid;
          break;
        }
        r.hi = mid;
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return roots;
}

}  // namespace

int descartes_bound(const UPoly& q, const Rational& lo, const Rational& hi) {
  // (1 + x)^d q((lo + hi x) / (1 + x)) scaled to integers.
  const ZPoly z = primitive_part(q);
  if (z.size() < 2) return 0;
  const std::size_t d = z.size() - 1;
  const Integer den = lcm(lo.get_den(), hi.get_den());
  const Integer a = lo.get_num() * (den / lo.get_den());
  const Integer b = hi.get_num() * (den / hi.get_den());
  // Powers of (a + b x) and den (1 + x).
  auto mul_linear = [](const ZPoly& p, const Integer& c0, const Integer& c1) {
    ZPoly r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] += p[i] * c0;
      r[i + 1] += p[i] * c1;
    }
    return r;
  };
  std::vector<ZPoly> lin(d + 1);
  lin[0] = ZPoly{Integer(1)};
  for (std::size_t i = 1; i <= d; ++i) lin[i] = mul_linear(lin[i - 1], a, b);
  ZPoly acc(d + 1);
  ZPoly den_pow{Integer(1)};
  for (std::size_t k = d + 1; k-- > 0;) {
    // term z_k (a + b x)^k (den (1 + x))^{d-k}
    const ZPoly t = [&] {
      ZPoly r(lin[k].size() + den_pow.size() - 1);
      for (std::size_t i = 0; i < lin[k].size(); ++i) {
        for (std::size_t j = 0; j < den_pow.size(); ++j) r[i + j] += lin[k][i] * den_pow[j];
      }
      return r;
    }();
    for (std::size_t i = 0; i < t.size(); ++i) acc[i] += z[k] * t[i];
    den_pow = mul_linear(den_pow, den, den);
  }
  return sign_variations(acc);
}

RootIntervals isolate_real_roots(const UPoly& p, unsigned long width_bits) {
  if (p.is_zero()) throw DomainError("cannot isolate the roots of the zero polynomial");
  RootIntervals all;
  const auto parts = squarefree_decomposition(p);
  // Isolate the square-free part once, then attribute multiplicities factor by factor.
  UPoly sqf = UPoly::constant(Rational(1));
  for (const auto& [g, m] : parts) sqf = sqf * g;
  const ZPoly zs = primitive_part(sqf);
  if (zs.size() < 2) return all;
  all = isolate_squarefree(zs);
  for (auto& r : all) {
    refine_interval(zs, r, width_bits);
    for (const auto& [g, m] : parts) {
      const ZPoly zg = primitive_part(g);
      const bool vanishes = r.exact() ? sign_at(zg, r.lo) == 0 : sign_at(zg, r.lo) * sign_at(zg, r.hi) < 0;
      if (vanishes) {
        r.multiplicity = m;
        break;
      }
    }
  }
  return all;
}

RootIntervals isolate_real_roots(const BiPoly& p, unsigned long width_bits) {
  const bool has_x = p.degree_in(kX) > 0;
  const bool has_y = p.degree_in(kY) > 0;
  if (has_x && has_y) throw DomainError("polynomial is not univariate");
  return isolate_real_roots(UPoly::from_poly(p, has_y ? kY : kX), width_bits);
}

void refine_root(const UPoly& g, RootInterval& root, unsigned long width_bits) {
  refine_interval(primitive_part(g), root, width_bits);
}

int sign_at_root(const UPoly& q, const UPoly& g, const RootInterval& root) {
  const ZPoly zq = primitive_part(q);
  if (zq.empty()) return 0;
  // primitive_part may flip the sign; compensate with the sign of the leading coefficient.
  const int flip = sign(q.leading());
  if (root.exact()) return sign(q.evaluate(root.lo));
  const UPoly h = gcd(q, g);
  if (h.degree() >= 1) {
    const ZPoly zh = primitive_part(h);
    if (sign_at(zh, root.lo) * sign_at(zh, root.hi) < 0) return 0;
  }
  RootInterval r = root;
  const ZPoly zg = primitive_part(g);
  for (int iter = 0;; ++iter) {
    if (r.exact()) return sign(q.evaluate(r.lo));
    const int s = sign_at(zq, r.lo);
    if (s != 0 && descartes_bound(q, r.lo, r.hi) == 0) return s * flip;
    if (iter > 20000) throw InternalError("sign determination at an algebraic root did not converge");
    const Rational mid = (r.lo + r.hi) / 2;
    const int sm = sign_at(zg, mid);
    if (sm == 0) {
      r.lo = r.hi = mid;
    } else if (sm != sign_at(zg, r.lo)) {
      r.hi = mid;
    } else {
      r.lo = mid;
    }
  }
}

UPoly dehomogenize(const BiPoly& fn) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(fn.degree(), 0) + 1));
  for (const auto& [e, coeff] : fn.terms()) c[static_cast<std::size_t>(e[kY])] += coeff;
  return UPoly(std::move(c));
}

LinearFactors real_linear_factors(const BiPoly& fn) {
  if (fn.is_zero()) throw DomainError("zero form has no linear factors");
  if (!fn.is_homogeneous()) throw DomainError("form is not homogeneous");
  const int n = fn.degree();
  LinearFactors out;
  if (n == 0) return out;
  const UPoly g = dehomogenize(fn);
  const int vertical = n - g.degree();
  const auto parts = squarefree_decomposition(g);
  for (const auto& [part, m] : parts) {
    for (auto& r : isolate_real_roots(part)) {
      LinearFactor lf;
      lf.multiplicity = m;
      lf.minimal = part;
      lf.root = r;
      lf.root.multiplicity = m;
      double theta = std::atan(r.approx());
      if (theta < 0) theta += std::numbers::pi;
      lf.theta = theta;
      out.factors.push_back(lf);
    }
  }
  if (vertical > 0) {
    LinearFactor lf;
    lf.multiplicity = vertical;
    lf.vertical = true;
    lf.theta = std::numbers::pi / 2;
    lf.minimal = UPoly::identity();
    lf.root = {Rational(0), Rational(0), vertical};
    out.factors.push_back(lf);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const LinearFactor& a, const LinearFactor& b) { return a.theta < b.theta; });
  out.R = static_cast<int>(out.factors.size());
  return out;
}

}  // namespace umbilic
