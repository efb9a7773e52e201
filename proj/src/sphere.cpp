#include "umbilic/sphere.hpp"

#include <cmath>
#include <numbers>

#include "umbilic/curvature.hpp"
#include "umbilic/errors.hpp"

namespace umbilic {

namespace {

TriPoly lift(const BiPoly& p) { return embed<2, 3>(p, {kU, kV}); }

TriPoly w_power(int k) { return TriPoly::monomial({0, 0, k}, Rational(1)); }

}  // namespace

TriPoly build_F(const BiPoly& f) {
  const auto parts = homogeneous_decompose(f);
  const int n = static_cast<int>(parts.size()) - 1;
  TriPoly F;
  for (int i = 0; i <= n; ++i) {
    for (const auto& [e, c] : parts[static_cast<std::size_t>(i)].terms()) {
      F.add_term({e[kX], e[kY], n - i}, c);
    }
  }
  return F;
}

ExtendedForm extended_form(const BiPoly& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("extension needs a polynomial of degree at least 2");
  const TriPoly F = build_F(f);
  const TriPoly Fu = F.partial(kU);
  const TriPoly Fv = F.partial(kV);
  const TriPoly Fuu = Fu.partial(kU);
  const TriPoly Fuv = Fu.partial(kV);
  const TriPoly Fvv = Fv.partial(kV);
  const TriPoly w2 = w_power(2 * (n - 1));
  ExtendedForm ext;
  ext.n = n;
  ext.A = Fuv * Fu * Fu - Fuu * Fu * Fv + w2 * Fuv;
  ext.B = Fvv * Fu * Fu - Fuu * Fv * Fv + w2 * (Fvv - Fuu);
  ext.C = Fvv * Fu * Fv - Fuv * Fv * Fv - w2 * Fuv;
  const TriPoly u = TriPoly::variable(kU);
  const TriPoly v = TriPoly::variable(kV);
  const TriPoly X = u * u * ext.A + u * v * ext.B + v * v * ext.C;
  if (!X.divide_by_variable(kW, 1, ext.T)) {
    throw InternalError("u^2 A + u v B + v^2 C is not divisible by w");
  }
  ext.T1 = ext.T - ext.T.restrict(kW, Rational(0));
  return ext;
}

Chart Chart::axis(const std::string& id) {
  Chart c;
  c.id = id;
  c.exact = true;
  if (id == "u+") {
    c.cos_t = 1;
    c.sin_t = 0;
    c.theta = 0.0;
  } else if (id == "v+") {
    c.cos_t = 0;
    c.sin_t = 1;
    c.theta = std::numbers::pi / 2;
  } else if (id == "u-") {
    c.cos_t = -1;
    c.sin_t = 0;
    c.theta = std::numbers::pi;
  } else if (id == "v-") {
    c.cos_t = 0;
    c.sin_t = -1;
    c.theta = 3 * std::numbers::pi / 2;
  } else {
    throw DomainError("unknown chart '" + id + "'");
  }
  return c;
}

Chart Chart::pythagorean(const Rational& c, const Rational& s) {
  if (c * c + s * s != 1) throw DomainError("rotation pair is not on the unit circle");
  Chart ch;
  ch.cos_t = c;
  ch.sin_t = s;
  ch.exact = true;
  ch.theta = std::atan2(to_double(s), to_double(c));
  if (ch.theta < 0) ch.theta += 2 * std::numbers::pi;
  ch.id = "rot:" + std::to_string(ch.theta * 180.0 / std::numbers::pi);
  return ch;
}

Chart Chart::rotation(double theta) {
  Chart ch;
  ch.theta = theta;
  ch.exact = false;
  ch.cos_t = std::cos(theta);
  ch.sin_t = std::sin(theta);
  ch.id = "rot:" + std::to_string(theta * 180.0 / std::numbers::pi);
  return ch;
}

Chart Chart::parse(const std::string& text) {
  if (text.rfind("rot:", 0) == 0) {
    std::size_t used = 0;
    double deg = 0.0;
    try {
      deg = std::stod(text.substr(4), &used);
    } catch (const std::exception&) {
      throw DomainError("bad rotation in chart '" + text + "'");
    }
    if (used != text.size() - 4 || !std::isfinite(deg)) throw DomainError("bad rotation in chart '" + text + "'");
    Chart ch = rotation(deg * std::numbers::pi / 180.0);
    ch.id = text;
    return ch;
  }
  return axis(text);
}

ChartForm chart_form(const ExtendedForm& ext, const Chart& chart) {
  if (!chart.exact) throw DomainError("exact chart form needs an axis or Pythagorean rotation");
  const Rational& c = chart.cos_t;
  const Rational& s = chart.sin_t;
  const BiPoly t = BiPoly::variable(kX);
  const BiPoly w = BiPoly::variable(kY);
  const BiPoly one = BiPoly::constant(Rational(1));
  const BiPoly u_sub = one * c - t * s;
  const BiPoly v_sub = one * s + t * c;
  const std::array<BiPoly, 3> subs{u_sub, v_sub, w};
  const BiPoly A = compose(ext.A, subs);
  const BiPoly B = compose(ext.B, subs);
  const BiPoly C = compose(ext.C, subs);
  ChartForm out;
  out.chart = chart;
  // w P = w (A s^2 - B s c + C c^2);  -Q = s (2uA + vB) - c (uB + 2vC).
  out.P = A * (s * s) - B * (s * c) + C * (c * c);
  const BiPoly two_uA_vB = u_sub * A * Rational(2) + v_sub * B;
  const BiPoly uB_2vC = u_sub * B + v_sub * C * Rational(2);
  out.Q = uB_2vC * c - two_uA_vB * s;
  out.S = compose(ext.T, subs);
  return out;
}

NumericChart::NumericChart(const ExtendedForm& ext, double theta)
    : A_(ext.A), B_(ext.B), C_(ext.C), T_(ext.T), theta_(theta), c_(std::cos(theta)), s_(std::sin(theta)) {}

std::array<double, 3> NumericChart::coefficients(double s, double w, double* scale) const {
  const double u = c_ - s * s_;
  const double v = s_ + s * c_;
  double sa = 0, sb = 0, sc = 0, st = 0;
  const double A = A_.eval({u, v, w}, &sa);
  const double B = B_.eval({u, v, w}, &sb);
  const double C = C_.eval({u, v, w}, &sc);
  const double T = T_.eval({u, v, w}, &st);
  const double a = w * (A * s_ * s_ - B * s_ * c_ + C * c_ * c_);
  const double b = s_ * (2 * u * A + v * B) - c_ * (u * B + 2 * v * C);
  if (scale != nullptr) *scale = sa + sb + sc + st;
  return {a, b, T};
}

EquatorIdentities equator_identities(const ExtendedForm& ext, const BiPoly& f) {
  const int n = ext.n;
  const auto parts = homogeneous_decompose(f);
  const BiPoly& fn = parts[static_cast<std::size_t>(n)];
  const BiPoly& fn1 = parts[static_cast<std::size_t>(n - 1)];
  const TriPoly u = TriPoly::variable(kU);
  const TriPoly v = TriPoly::variable(kV);
  const TriPoly fnh = lift(fn * hessian_det(fn));
  Rational kk(n, 2 * (n - 1));
  kk.canonicalize();
  EquatorIdentities out;
  const Rational half(1, 2);
  out.uAvB.lhs = (u * ext.A + v * ext.B * half).restrict(kW, Rational(0));
  out.uAvB.rhs = v * fnh * (-kk);
  out.uAvB.holds = out.uAvB.lhs == out.uAvB.rhs;
  out.uBvC.lhs = (u * ext.B * half + v * ext.C).restrict(kW, Rational(0));
  out.uBvC.rhs = u * fnh * kk;
  out.uBvC.holds = out.uBvC.lhs == out.uBvC.rhs;
  const BiPoly bracket = fn1.partial(kX) * fn.partial(kY) - fn1.partial(kY) * fn.partial(kX);
  out.T0.lhs = ext.T.restrict(kW, Rational(0));
  out.T0.rhs = lift(fn * bracket * Rational(n));
  out.T0.holds = out.T0.lhs == out.T0.rhs;
  return out;
}

IdentityReport check_identities(const BiPoly& f) {
  IdentityReport r;
  const int n = f.degree();
  if (n < 2) throw DomainError("identities need a polynomial of degree at least 2");
  const auto parts = homogeneous_decompose(f);
  const BiPoly x = BiPoly::variable(kX);
  const BiPoly y = BiPoly::variable(kY);
  r.euler = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const BiPoly lhs = parts[i] * Rational(static_cast<long>(i));
    const BiPoly rhs = x * parts[i].partial(kX) + y * parts[i].partial(kY);
    r.euler = r.euler && lhs == rhs;
  }
  ExtendedForm ext;
  try {
    ext = extended_form(f);
    r.omega_divisibility = true;
  } catch (const InternalError&) {
    return r;
  }
  const auto eq = equator_identities(ext, f);
  r.equator_uAvB = eq.uAvB.holds;
  r.equator_uBvC = eq.uBvC.holds;
  r.equator_T = eq.T0.holds;

  const BiPoly h = hessian_det(f);
  r.hessian_degree = h.degree() <= 2 * n - 4;
  const BiPoly hn = hessian_det(parts[static_cast<std::size_t>(n)]);
  if (h.is_zero()) {
    r.hf_restriction = hn.is_zero();
  } else {
    const TriPoly Hf = homogenize_hessian(f).Hf;
    const bool at_zero = Hf.restrict(kW, Rational(0)) == lift(hn);
    const TriPoly at_one = Hf.restrict(kW, Rational(1));
    r.hf_restriction = at_zero && at_one == lift(h) && Hf.is_homogeneous() &&
                       (Hf.degree() == 2 * n - 4);
  }
  auto homogeneous_of = [](const TriPoly& p, int d) { return p.is_zero() || (p.is_homogeneous() && p.degree() == d); };
  r.homogeneity = homogeneous_of(ext.A, 3 * n - 4) && homogeneous_of(ext.B, 3 * n - 4) &&
                  homogeneous_of(ext.C, 3 * n - 4) && homogeneous_of(ext.T, 3 * n - 3);
  return r;
}

SpherePoint project(double x, double y, int sheet) {
  const double r = std::sqrt(1.0 + x * x + y * y);
  SpherePoint p{x / r, y / r, 1.0 / r};
  if (sheet == 2) {
    p.u = -p.u;
    p.v = -p.v;
    p.w = -p.w;
  } else if (sheet != 1) {
    throw DomainError("sheet must be 1 or 2");
  }
  return p;
}

}  // namespace umbilic
