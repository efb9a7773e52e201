#include "umbilic/infinity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "umbilic/curvature.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/loopindex.hpp"

namespace umbilic {

namespace {

constexpr double kPi = std::numbers::pi;

using QuadPoly = Poly<4>;  // (u, v, w, t)

constexpr std::size_t kT3 = 2;  // t in Poly<3> (x, y, t)
constexpr std::size_t kT4 = 3;  // t in Poly<4>

UPoly reduce(const UPoly& p, const LinearFactor& d) {
  if (d.vertical || d.minimal.degree() < 1) return p;
  return p % d.minimal;
}

AlgebraicValue value_at(const UPoly& p, const LinearFactor& d) {
  AlgebraicValue out;
  out.poly = reduce(p, d);
  if (!d.vertical && out.poly.degree() > 0 && d.root.exact()) out.poly = UPoly::constant(out.poly.evaluate(d.root.lo));
  if (out.poly.degree() <= 0) {
    out.exact = out.poly.is_zero() ? Rational(0) : out.poly.coeff(0);
    out.sign = sign(*out.exact);
    out.approx = to_double(*out.exact);
    return out;
  }
  out.sign = sign_at_root(out.poly, d.minimal, d.root);
  out.approx = out.poly.evaluate(d.root.approx());
  return out;
}

bool vanishes(const UPoly& p, const LinearFactor& d) { return value_at(p, d).sign == 0; }

// f moved so that the direction lands on (1, 0): (x, y) -> (x - t y, t x + y), or (-y, x).
Poly<3> moved(const BiPoly& f, const LinearFactor& d) {
  const Poly<3> x = Poly<3>::variable(0);
  const Poly<3> y = Poly<3>::variable(1);
  const Poly<3> t = Poly<3>::variable(kT3);
  if (d.vertical) return compose<2, 3>(f, {-y, x});
  return reduce_mod(compose<2, 3>(f, {x - t * y, t * x + y}), kT3, d.minimal);
}

// Coefficient of x^i y^j as a polynomial in t.
UPoly coeff_xy(const Poly<3>& p, int i, int j) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    if (e[0] != i || e[1] != j) continue;
    if (c.size() <= static_cast<std::size_t>(e[kT3])) c.resize(static_cast<std::size_t>(e[kT3]) + 1);
    c[static_cast<std::size_t>(e[kT3])] += v;
  }
  return UPoly(std::move(c));
}

UPoly coeff_vw(const QuadPoly& p, int i, int j) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    if (e[0] != 0 || e[1] != i || e[2] != j) continue;
    if (c.size() <= static_cast<std::size_t>(e[kT4])) c.resize(static_cast<std::size_t>(e[kT4]) + 1);
    c[static_cast<std::size_t>(e[kT4])] += v;
  }
  return UPoly(std::move(c));
}

Poly<3> part_of_degree(const Poly<3>& p, int d) {
  Poly<3> out;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] == d) out.add_term(e, c);
  }
  return out;
}

UPoly constant(long k) { return UPoly::constant(Rational(k)); }

// Binary form p(u, v) read on the direction: p(1, t), or p(0, 1) for the vertical one.
UPoly on_direction(const BiPoly& p, const LinearFactor& d) {
  if (p.is_zero()) return UPoly();
  if (d.vertical) {
    Rational c = 0;
    for (const auto& [e, v] : p.terms()) {
      if (e[kX] == 0) c += v;
    }
    return UPoly::constant(c);
  }
  return dehomogenize(p);
}

// Extended form coefficient at the equator point of the direction: (1, t, 0) or (0, 1, 0).
UPoly ext_on_direction(const TriPoly& p, const LinearFactor& d) {
  const TriPoly at_equator = p.restrict(kW, Rational(0));
  if (d.vertical) {
    return UPoly::constant(at_equator.restrict(kU, Rational(0)).restrict(kV, Rational(1)).coeff({0, 0, 0}));
  }
  return UPoly::from_poly(at_equator.restrict(kU, Rational(1)), kV);
}

BiPoly bracket(const BiPoly& fm, const BiPoly& fn) {
  return fm.partial(kX) * fn.partial(kY) - fm.partial(kY) * fn.partial(kX);
}

// An exact unit vector within about 1e-12 of (cos theta, sin theta).
Chart pythagorean_chart(double theta) {
  theta = std::fmod(theta, 2 * kPi);
  if (theta < 0) theta += 2 * kPi;
  const bool flip = theta > kPi / 2 && theta <= 3 * kPi / 2;
  const double base = flip ? theta - kPi : (theta > 3 * kPi / 2 ? theta - 2 * kPi : theta);
  const Rational t(std::ldexp(std::round(std::ldexp(std::tan(base / 2), 44)), -44));
  const Rational den = 1 + t * t;
  Rational c = (1 - t * t) / den;
  Rational s = 2 * t / den;
  if (flip) {
    c = -c;
    s = -s;
  }
  return Chart::pythagorean(c, s);
}

double wrap_angle(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  if (a > kPi) a -= 2 * kPi;
  return a;
}

}  // namespace

const char* to_string(InfinitySource s) {
  switch (s) {
    case InfinitySource::LinearFactor: return "linear-factor";
    case InfinitySource::HessianBracket: return "hessian-bracket";
  }
  return "?";
}

HfAtInfinity hf_at_infinity(const BiPoly& f, const LinearFactor& dir) {
  const int n = f.degree();
  if (n < 2) throw DomainError("umbilics at infinity need degree at least 2");
  HfAtInfinity out;
  const BiPoly fn = f.homogeneous_part(n);
  const BiPoly hess = hessian_det(fn);
  out.unit_value = hess.is_zero() ? 0.0 : CompiledPoly<2>(hess)({std::cos(dir.theta), std::sin(dir.theta)});
  out.sign = hess.is_zero() ? 0 : value_at(on_direction(hess, dir), dir).sign;

  const Poly<3> gn = part_of_degree(moved(f, dir), n);
  const UPoly a = coeff_xy(gn, n - 1, 1);
  const Poly<3> gxx = gn.partial(0, 2);
  const Poly<3> gyy = gn.partial(1, 2);
  const Poly<3> gxy = gn.partial(0).partial(1);
  const UPoly at_one = coeff_xy(gxx, n - 2, 0) * coeff_xy(gyy, n - 2, 0) - coeff_xy(gxy, n - 2, 0) * coeff_xy(gxy, n - 2, 0);
  const UPoly closed = -(a * a * Rational((n - 1) * (n - 1)));
  out.closed_form = value_at(closed, dir);
  out.matches = vanishes(at_one - closed, dir) && vanishes(coeff_xy(gn, n, 0), dir);
  out.certified = out.matches && out.closed_form.sign < 0;
  return out;
}

LemonCertificate lemon_certificate(const BiPoly& f, const LinearFactor& dir, bool hypotheses) {
  const int n = f.degree();
  if (n < 2) throw DomainError("umbilics at infinity need degree at least 2");
  LemonCertificate cert;
  const Poly<3> g = moved(f, dir);
  const Poly<3> gn = part_of_degree(g, n);
  if (!vanishes(coeff_xy(gn, n, 0), dir)) return cert;  // fn does not vanish on the direction

  auto red = [&dir](const UPoly& p) { return reduce(p, dir); };
  const UPoly a = red(coeff_xy(gn, n - 1, 1));
  const UPoly b = red(coeff_xy(part_of_degree(g, n - 1), n - 1, 0));
  cert.a = value_at(a, dir);
  cert.b = value_at(b, dir);
  cert.applicable = hypotheses && cert.a.sign != 0 && (n == 2 || cert.b.sign != 0);

  // F(u, v, w, t) and the chart u = 1, expanded to second order in (v, w).
  QuadPoly F;
  for (const auto& [e, c] : g.terms()) F.add_term({e[0], e[1], n - e[0] - e[1], e[kT3]}, c);
  const std::array<bool, 4> vw{false, true, true, false};
  auto at_chart = [&vw](const QuadPoly& p) { return p.restrict(kU, Rational(1)).truncated(vw, 2); };
  auto mul = [&vw, &dir](const QuadPoly& x, const QuadPoly& y) {
    QuadPoly p = QuadPoly::multiply_truncated(x, y, vw, 2);
    return dir.vertical ? p : reduce_mod(p, kT4, dir.minimal);
  };
  const QuadPoly Fu = at_chart(F.partial(kU));
  const QuadPoly Fv = at_chart(F.partial(kV));
  const QuadPoly Fuu = at_chart(F.partial(kU, 2));
  const QuadPoly Fuv = at_chart(F.partial(kU).partial(kV));
  const QuadPoly Fvv = at_chart(F.partial(kV, 2));
  const QuadPoly w2 = QuadPoly::monomial({0, 0, 2 * (n - 1), 0}, Rational(1)).truncated(vw, 2);
  const QuadPoly A = mul(mul(Fuv, Fu), Fu) - mul(mul(Fuu, Fu), Fv) + mul(w2, Fuv);
  const QuadPoly B = mul(mul(Fvv, Fu), Fu) - mul(mul(Fuu, Fv), Fv) + mul(w2, Fvv - Fuu);
  const QuadPoly C = mul(mul(Fvv, Fu), Fv) - mul(mul(Fuv, Fv), Fv) - mul(w2, Fuv);
  const QuadPoly v = QuadPoly::variable(kV);
  const QuadPoly X = A + mul(v, B) + mul(mul(v, v), C);
  if (!vanishes(coeff_vw(X, 0, 0), dir) || !vanishes(coeff_vw(X, 1, 0), dir) || !vanishes(coeff_vw(X, 2, 0), dir)) {
    throw InternalError("chart expansion is not divisible by w");
  }

  const UPoly P0 = red(coeff_vw(C, 0, 0));
  const UPoly Q0 = red(coeff_vw(B, 0, 0));
  const UPoly Qv = red(coeff_vw(B, 1, 0) + coeff_vw(C, 0, 0) * Rational(2));
  const UPoly Qw = red(coeff_vw(B, 0, 1));
  const UPoly T0 = red(coeff_vw(X, 0, 1));
  const UPoly Tv = red(coeff_vw(X, 1, 1));
  const UPoly Tw = red(coeff_vw(X, 0, 2));
  const UPoly a2 = red(a * a);
  const UPoly a3 = red(a2 * a);
  const long m = n - 1;

  cert.flat = vanishes(Q0, dir) && vanishes(T0, dir);
  cert.const_C = value_at(P0, dir);
  cert.lin_T_v = value_at(Tv, dir);
  cert.lin_T_w = value_at(Tw, dir);
  if (n >= 3) {
    const UPoly Bv = red(coeff_vw(B, 1, 0));
    cert.lin_B_v = value_at(Bv, dir);
    cert.lin_B_w = value_at(Qw, dir);
    cert.const_C_matches = vanishes(P0 + a3 * Rational(m), dir);
    cert.lin_B_matches = vanishes(Bv + a3 * Rational(m * (n - 2)), dir) && vanishes(Qw, dir);
    cert.lin_B_w_corrected = vanishes(Qw + red(a2 * b) * Rational(m * (n - 2)), dir);
    cert.lin_T_matches = vanishes(Tv - red(a2 * b) * Rational(n * m), dir) &&
                         vanishes(Tw - red(a * red(b * b)) * Rational(m * m), dir);
  } else {
    cert.lin_B_v = value_at(Qv, dir);
    cert.lin_B_w = value_at(Qw, dir);
    cert.const_C_matches = vanishes(P0 + a3, dir);
    cert.lin_B_matches = vanishes(Qv + a3 * Rational(2), dir) && vanishes(Qw, dir);
    cert.lin_B_w_corrected = cert.lin_B_matches;
    cert.lin_T_matches = vanishes(Tv - red(a2 * b) * Rational(2), dir) &&
                         vanishes(Tw - red(a * (constant(1) + red(b * b))), dir);
  }

  // Quadratic part of the discriminant (B + 2vC)^2 - 4 w C T and its second derivatives.
  const UPoly H11 = red(Qv * Qv) * Rational(2);
  const UPoly H12 = red(Qv * Qw) * Rational(2) - red(P0 * Tv) * Rational(4);
  const UPoly H22 = red(Qw * Qw) * Rational(2) - red(P0 * Tw) * Rational(8);
  const UPoly detH = red(H11 * H22) - red(H12 * H12);
  // Linear change of the proof, M = [[sqrt(n-2) b, -b], [0, a]] (n >= 3) or [[1, b], [0, -a]]
  // (n = 2), then division by lambda so that the dv^2 coefficient becomes -w. With
  // D = det(M)^2 the normalized determinant is D^3 det H / lambda^4.
  UPoly D;
  UPoly lambda;
  long target = 0;
  if (n >= 3) {
    D = red(a2 * red(b * b)) * Rational(n - 2);
    lambda = -(red(red(b * b) * red(a * P0)) * Rational(n - 2));
    target = 16L * n * n;
  } else {
    D = a2;
    lambda = red(a * P0);
    target = 64;
  }
  const UPoly D3 = red(red(D * D) * D);
  const UPoly l2 = red(lambda * lambda);
  const UPoly l4 = red(l2 * l2);
  const UPoly numer = red(D3 * detH);
  cert.det_matches = value_at(l4, dir).sign != 0 && vanishes(numer - l4 * Rational(target), dir);
  cert.positive_definite = value_at(H11, dir).sign > 0 && value_at(detH, dir).sign > 0;
  const double l4v = value_at(l4, dir).approx;
  cert.normalized_det = l4v != 0.0 ? value_at(numer, dir).approx / l4v : 0.0;
  return cert;
}

InfinitySearch infinity_umbilics(const BiPoly& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("umbilics at infinity need degree at least 2");
  InfinitySearch out;
  const BiPoly fn = f.homogeneous_part(n);
  const BiPoly fm = f.homogeneous_part(n - 1);
  const LinearFactors factors = real_linear_factors(fn);
  const Hypotheses hyp = check_hypotheses(f, factors);
  out.repeated_factor = !hyp.no_repeated_real_factor;
  out.coprime = hyp.coprime_real_factors;

  for (const auto& d : factors.factors) {
    InfinityUmbilic p;
    p.theta = d.theta;
    p.direction = d;
    p.source = InfinitySource::LinearFactor;
    out.umbilics.push_back(p);
  }

  // General criterion: |Hess fn| and the bracket both vanish.
  const BiPoly hess = hessian_det(fn);
  const BiPoly br = bracket(fm, fn);
  if (hess.is_zero() && br.is_zero()) {
    out.whole_equator = true;
  } else {
    const BiPoly& lead = hess.is_zero() ? br : hess;
    const BiPoly& other = hess.is_zero() ? hess : br;
    if (lead.degree() >= 1) {
      for (const auto& d : real_linear_factors(lead).factors) {
        if (vanishes(on_direction(fn, d), d)) continue;
        if (!other.is_zero() && !vanishes(on_direction(other, d), d)) continue;
        InfinityUmbilic p;
        p.theta = d.theta;
        p.direction = d;
        p.source = InfinitySource::HessianBracket;
        out.umbilics.push_back(p);
        out.bracket_directions = true;
      }
    }
  }
  std::sort(out.umbilics.begin(), out.umbilics.end(),
            [](const InfinityUmbilic& x, const InfinityUmbilic& y) { return x.theta < y.theta; });

  const ExtendedForm ext = extended_form(f);
  const TriPoly u = TriPoly::variable(kU);
  const TriPoly v = TriPoly::variable(kV);
  const TriPoly two_uA_vB = u * ext.A * Rational(2) + v * ext.B;
  const TriPoly uB_2vC = u * ext.B + v * ext.C * Rational(2);
  auto flat_at = [&](const LinearFactor& d) {
    return vanishes(ext_on_direction(two_uA_vB, d), d) && vanishes(ext_on_direction(uB_2vC, d), d) &&
           vanishes(ext_on_direction(ext.T, d), d);
  };
  const bool hypotheses = !out.repeated_factor && out.coprime;
  for (auto& p : out.umbilics) {
    p.hf = hf_at_infinity(f, p.direction);
    if (p.source == InfinitySource::LinearFactor) p.certificate = lemon_certificate(f, p.direction, hypotheses);
    p.flat = flat_at(p.direction);
  }

  // Away from the umbilic directions some coefficient must survive (rational sample points).
  out.non_umbilic_samples_ok = true;
  if (!out.whole_equator) {
    for (int k = -8; k <= 8; ++k) {
      LinearFactor d;
      d.theta = std::atan2(k / 8.0, 1.0);
      const Rational t = Rational(k) / 8;
      d.minimal = UPoly({-t, Rational(1)});
      d.root.lo = d.root.hi = t;
      const bool umbilic_direction = std::any_of(out.umbilics.begin(), out.umbilics.end(), [&](const InfinityUmbilic& p) {
        return !p.direction.vertical && vanishes(p.direction.minimal, d);
      });
      if (!umbilic_direction && flat_at(d)) out.non_umbilic_samples_ok = false;
    }
  }
  return out;
}

CertifiedIndex infinity_index(const ExtendedForm& ext, double theta, double radius, int samples) {
  const Chart chart = pythagorean_chart(theta);
  const ChartForm cf = chart_form(ext, chart);
  const BiPoly w = BiPoly::variable(kY);
  const auto numeric = std::make_shared<NumericChart>(ext, theta);
  const FormSampler sampler = [numeric](double s, double ww, double* scale) {
    return numeric->coefficients(s, ww, scale);
  };
  return loop_index(w * cf.P, -cf.Q, cf.S, sampler, 0.0, 0.0, radius, samples);
}

double infinity_radius(double theta, const std::vector<double>& other_thetas, const std::vector<UmbilicPoint>& finite) {
  double nearest = std::numeric_limits<double>::infinity();
  for (double o : other_thetas) {
    const double d = wrap_angle(o - theta);
    if (std::fabs(d) < kPi / 2) nearest = std::min(nearest, std::fabs(std::tan(d)));
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (const auto& p : finite) {
    const double xr = p.x * c + p.y * s;
    const double yr = -p.x * s + p.y * c;
    if (xr == 0.0) continue;
    nearest = std::min(nearest, std::hypot(yr / xr, 1.0 / xr));
  }
  return std::min(0.05, 0.25 * nearest);
}

void compute_infinity_indices(const BiPoly& f, InfinitySearch& search, const std::vector<UmbilicPoint>& finite,
                              int samples) {
  if (search.umbilics.empty() || search.whole_equator) return;
  const ExtendedForm ext = extended_form(f);
  std::vector<double> points;
  for (const auto& p : search.umbilics) {
    points.push_back(p.theta);
    points.push_back(p.theta + kPi);
  }
  for (auto& p : search.umbilics) {
    for (int j = 0; j < 2; ++j) {
      const double theta = p.theta + j * kPi;
      std::vector<double> others;
      for (double o : points) {
        if (std::fabs(wrap_angle(o - theta)) > 1e-15) others.push_back(o);
      }
      const double r = infinity_radius(theta, others, finite);
      p.index_radius[static_cast<std::size_t>(j)] = r;
      p.index[static_cast<std::size_t>(j)] = infinity_index(ext, theta, r, samples);
    }
    const bool lemon = p.source == InfinitySource::LinearFactor && p.certificate.applicable && p.certificate.all() &&
                       p.hf.certified && p.flat && p.index[0].certified && p.index[1].certified &&
                       p.index[0].index_halves == 1 && p.index[1].index_halves == 1;
    p.type = lemon ? "Lemon" : "Uncertified";
  }
}

CountBounds count_bounds(const BiPoly& f, const InfinitySearch& search) {
  const int n = f.degree();
  CountBounds out;
  out.applicable = !search.repeated_factor;
  const BiPoly hess = hessian_det(f.homogeneous_part(n));
  out.compact = !hess.is_zero() && (hess.degree() == 0 || real_linear_factors(hess).R == 0);
  out.count = 2 * static_cast<int>(search.umbilics.size());
  out.bound = out.compact ? 2 * n : 2 * n - 4;
  out.ok = out.count <= out.bound;
  return out;
}

SphereBalance sphere_balance(const std::vector<UmbilicPoint>& finite, const InfinitySearch& search) {
  SphereBalance out;
  out.applicable = !search.whole_equator;
  for (const auto& p : finite) {
    out.finite_halves += p.index_halves;
    out.applicable = out.applicable && p.certified;
  }
  for (const auto& p : search.umbilics) {
    for (const auto& idx : p.index) {
      out.equator_halves += idx.index_halves;
      out.applicable = out.applicable && idx.certified;
    }
  }
  out.total_halves = 2 * out.finite_halves + out.equator_halves;
  out.closes = out.total_halves == 4;
  return out;
}

}  // namespace umbilic
