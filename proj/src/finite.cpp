#include "umbilic/finite.hpp"
#include "umbilic/loopindex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <unsupported/Eigen/Polynomials>

#include "umbilic/errors.hpp"
#include "umbilic/resultant.hpp"

namespace umbilic {

namespace {

// Floating evaluator for the three coefficients and their first partials.
class FormEvaluator {
 public:
  explicit FormEvaluator(const PrincipalForm& form) {
    const std::array<const BiPoly*, 3> polys{&form.A, &form.B, &form.C};
    for (std::size_t i = 0; i < 3; ++i) {
      value_[i] = CompiledPoly<2>(*polys[i]);
      dx_[i] = CompiledPoly<2>(polys[i]->partial(kX));
      dy_[i] = CompiledPoly<2>(polys[i]->partial(kY));
    }
  }

  std::array<double, 3> values(double x, double y, std::array<double, 3>* scales = nullptr) const {
    std::array<double, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) v[i] = value_[i].eval({x, y}, scales ? &(*scales)[i] : nullptr);
    return v;
  }

  Eigen::Matrix<double, 3, 2> jacobian(double x, double y) const {
    Eigen::Matrix<double, 3, 2> J;
    for (std::size_t i = 0; i < 3; ++i) {
      J(static_cast<Eigen::Index>(i), 0) = dx_[i]({x, y});
      J(static_cast<Eigen::Index>(i), 1) = dy_[i]({x, y});
    }
    return J;
  }

  double relative_residual(double x, double y, std::array<double, 3>* abs_values = nullptr) const {
    std::array<double, 3> scales{};
    const auto v = values(x, y, &scales);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::fabs(v[i]) / (scales[i] + 1.0));
    if (abs_values != nullptr) {
      for (std::size_t i = 0; i < 3; ++i) (*abs_values)[i] = std::fabs(v[i]);
    }
    return worst;
  }

 private:
  std::array<CompiledPoly<2>, 3> value_, dx_, dy_;
};

// Coefficients of p in y, each a compiled polynomial in x.
std::vector<CompiledPoly<2>> fibre_coefficients(const BiPoly& p) {
  const int d = std::max(p.degree_in(kY), 0);
  std::vector<BiPoly> parts(static_cast<std::size_t>(d + 1));
  for (const auto& [e, c] : p.terms()) parts[static_cast<std::size_t>(e[kY])].add_term({e[kX], 0}, c);
  std::vector<CompiledPoly<2>> out;
  for (const auto& q : parts) out.emplace_back(q);
  return out;
}

std::vector<double> real_fibre_roots(const std::vector<CompiledPoly<2>>& coeffs, double x) {
  std::vector<double> c;
  for (const auto& q : coeffs) c.push_back(q({x, 0.0}));
  double big = 0.0;
  for (double v : c) big = std::max(big, std::fabs(v));
  std::vector<double> roots;
  if (big == 0.0) return roots;
  while (c.size() > 1 && std::fabs(c.back()) <= 1e-14 * big) c.pop_back();
  if (c.size() < 2) return roots;
  if (c.size() == 2) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }
  Eigen::VectorXd coeff(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) coeff(static_cast<Eigen::Index>(i)) = c[i];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeff);
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
    const std::complex<double> z = solver.roots()(i);
    if (std::fabs(z.imag()) <= 1e-4 * (1.0 + std::abs(z))) roots.push_back(z.real());
  }
  return roots;
}

bool fibre_vanishes(const std::vector<CompiledPoly<2>>& coeffs, double x, double tol) {
  for (const auto& q : coeffs) {
    double scale = 0.0;
    const double v = q.eval({x, 0.0}, &scale);
    if (std::fabs(v) > tol * (scale + 1.0)) return false;
  }
  return true;
}

// Gauss-Newton on the overdetermined system (A, B, C) = 0.
std::array<double, 2> refine(const FormEvaluator& ev, double x, double y) {
  for (int it = 0; it < 60; ++it) {
    const auto v = ev.values(x, y);
    const Eigen::Vector3d r(v[0], v[1], v[2]);
    const Eigen::Matrix<double, 3, 2> J = ev.jacobian(x, y);
    const Eigen::Vector2d step = J.colPivHouseholderQr().solve(-r);
    if (!step.allFinite()) break;
    x += step(0);
    y += step(1);
    if (std::fabs(step(0)) + std::fabs(step(1)) <= 1e-15 * (1.0 + std::fabs(x) + std::fabs(y))) break;
  }
  return {x, y};
}

bool suspect_curve(const FormEvaluator& ev, double x, double y) {
  const Eigen::Matrix<double, 3, 2> J = ev.jacobian(x, y);
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(J, Eigen::ComputeFullV);
  const auto s = svd.singularValues();
  if (s(0) != 0.0 && s(1) > 1e-8 * s(0)) return false;
  // Along a curve of zeros the values stay at rounding level relative to their own scale;
  // at an isolated degenerate zero they grow like a power of the distance.
  const Eigen::Vector2d kernel = svd.matrixV().col(1);
  const double h = 1e-4 * (1.0 + std::hypot(x, y));
  for (double sgn : {-1.0, 1.0}) {
    std::array<double, 3> scales{};
    const auto v = ev.values(x + sgn * h * kernel(0), y + sgn * h * kernel(1), &scales);
    for (std::size_t i = 0; i < 3; ++i) {
      if (std::fabs(v[i]) > 1e-8 * scales[i]) return false;
    }
  }
  return true;
}

Box expand_to_cover(const Box& start, const std::vector<UmbilicPoint>& pts, bool auto_expand) {
  Box box = start;
  auto covered = [&pts](const Box& b) {
    return std::all_of(pts.begin(), pts.end(), [&b](const UmbilicPoint& p) { return b.contains(p.x, p.y); });
  };
  auto reach = [](const Box& b) {
    return std::max({std::fabs(b.xmin), std::fabs(b.xmax), std::fabs(b.ymin), std::fabs(b.ymax)});
  };
  while (auto_expand && !covered(box) && reach(box) < kMaxBoxHalfWidth) {
    const double cx = (box.xmin + box.xmax) / 2;
    const double cy = (box.ymin + box.ymax) / 2;
    const double hx = (box.xmax - box.xmin);
    const double hy = (box.ymax - box.ymin);
    box = {std::max(cx - hx, -kMaxBoxHalfWidth), std::min(cx + hx, kMaxBoxHalfWidth),
           std::max(cy - hy, -kMaxBoxHalfWidth), std::min(cy + hy, kMaxBoxHalfWidth)};
  }
  return box;
}

}  // namespace

FormSampler plane_sampler(const PrincipalForm& form) {
  auto p = std::make_shared<CompiledPoly<2>>(form.fx);
  auto q = std::make_shared<CompiledPoly<2>>(form.fy);
  auto r = std::make_shared<CompiledPoly<2>>(form.fx.partial(kX));
  auto s = std::make_shared<CompiledPoly<2>>(form.fx.partial(kY));
  auto t = std::make_shared<CompiledPoly<2>>(form.fy.partial(kY));
  return [p, q, r, s, t](double x, double y, double* scale) -> std::array<double, 3> {
    const double fx = (*p)({x, y});
    const double fy = (*q)({x, y});
    const double fxx = (*r)({x, y});
    const double fxy = (*s)({x, y});
    const double fyy = (*t)({x, y});
    const double E = 1 + fx * fx;
    const double G = 1 + fy * fy;
    const double F = fx * fy;
    if (scale != nullptr) {
      *scale = std::fabs(fxy) * (E + G) + std::fabs(F) * (std::fabs(fxx) + std::fabs(fyy)) +
               std::fabs(fyy) * E + std::fabs(fxx) * G;
    }
    return {fxy * E - F * fxx, fyy * E - fxx * G, F * fyy - fxy * G};
  };
}

FiniteSearch find_finite_umbilics(const PrincipalForm& form, const Box& box, double tol, int samples,
                                  bool auto_expand) {
  if (!(box.xmin < box.xmax) || !(box.ymin < box.ymax)) throw DomainError("search box is empty");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  FiniteSearch out;
  const FormEvaluator ev(form);

  // Umbilics are the common zeros of any two of A, B, C (G A - F B + E C = 0 with E, G > 0).
  const std::array<std::pair<const BiPoly*, const BiPoly*>, 3> pairs{
      std::pair{&form.A, &form.B}, std::pair{&form.C, &form.B}, std::pair{&form.A, &form.C}};
  const std::array<const char*, 3> names{"A,B", "C,B", "A,C"};
  UPoly res;
  std::size_t chosen = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const BiPoly& p = *pairs[i].first;
    const BiPoly& q = *pairs[i].second;
    if (p.is_zero() || q.is_zero()) continue;
    if (p.degree_in(kY) == 0 && q.degree_in(kY) == 0) continue;
    res = resultant_univariate(p, q, kY);
    if (!res.is_zero()) {
      chosen = i;
      break;
    }
  }
  std::vector<UmbilicPoint> found;
  if (chosen == pairs.size()) {
    // Every pair shares a factor (or only one coefficient is nonzero): not resolvable here.
    out.non_isolated = true;
    out.box = box;
    return out;
  }
  out.pair = names[chosen];
  out.resultant_degree = res.degree();
  const auto fa = fibre_coefficients(*pairs[chosen].first);
  const auto fb = fibre_coefficients(*pairs[chosen].second);
  // Real roots of the resultant in x pair with those in y; the fibre solve alone loses
  // far-out points whose fibre polynomial is badly conditioned.
  std::vector<double> y_roots;
  if (res.degree() >= 1) {
    const UPoly res_y = resultant_univariate(*pairs[chosen].first, *pairs[chosen].second, kX);
    if (res_y.degree() >= 1) {
      for (const auto& root : isolate_real_roots(res_y)) y_roots.push_back(root.approx());
    }
  }
  if (res.degree() >= 1) {
    for (const auto& root : isolate_real_roots(res)) {
      const double xk = root.approx();
      if (fibre_vanishes(fa, xk, tol) && fibre_vanishes(fb, xk, tol)) {
        out.non_isolated = true;  // a vertical line of common zeros
        continue;
      }
      std::vector<double> seeds = real_fibre_roots(fa, xk);
      const auto more = real_fibre_roots(fb, xk);
      seeds.insert(seeds.end(), more.begin(), more.end());
      for (double yk : y_roots) {
        if (ev.relative_residual(xk, yk) < 1e-6) seeds.push_back(yk);
      }
      for (double y0 : seeds) {
        const auto [x, y] = refine(ev, xk, y0);
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        if (std::fabs(x - xk) > 1e-6 * (1.0 + std::fabs(xk))) continue;
        UmbilicPoint p;
        p.x = x;
        p.y = y;
        p.relative_residual = ev.relative_residual(x, y, &p.residuals);
        if (p.relative_residual >= tol) continue;
        const double merge = 10 * tol * (1.0 + std::hypot(x, y));
        const bool duplicate = std::any_of(found.begin(), found.end(), [&](const UmbilicPoint& q) {
          return std::hypot(q.x - x, q.y - y) <= std::max(merge, 1e-8 * (1.0 + std::hypot(x, y)));
        });
        if (duplicate) continue;
        p.isolated_suspect = suspect_curve(ev, x, y);
        if (p.isolated_suspect) out.non_isolated = true;
        found.push_back(p);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const UmbilicPoint& a, const UmbilicPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });

  const FormSampler sampler = plane_sampler(form);
  for (auto& p : found) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& q : found) {
      if (&q != &p) nearest = std::min(nearest, std::hypot(q.x - p.x, q.y - p.y));
    }
    const double radius = std::min(0.1, 0.25 * nearest);
    const auto idx = loop_index(form.A, form.B, form.C, sampler, p.x, p.y, radius, samples);
    p.index_halves = idx.index_halves;
    p.winding_radius = radius;
    p.certified = idx.certified;
  }

  out.box = expand_to_cover(box, found, auto_expand);
  for (const auto& p : found) {
    if (out.box.contains(p.x, p.y)) {
      out.points.push_back(p);
    } else {
      ++out.outside;
    }
  }
  return out;
}

double direction_at(const PrincipalForm& form, double x, double y, int branch, std::optional<double> prev) {
  if (branch != 1 && branch != 2) throw DomainError("branch must be 1 or 2");
  double scale = 0.0;
  const auto c = plane_sampler(form)(x, y, &scale);
  const double mag = std::max({std::fabs(c[0]), std::fabs(c[1]), std::fabs(c[2])});
  const auto dirs = null_directions(c[0], c[1], c[2]);
  if (!dirs || mag <= 1e-13 * (scale + 1.0)) throw DomainError("direction undefined at an umbilic point");
  if (prev) return closest_direction(*dirs, *prev);
  return branch == 1 ? dirs->first : dirs->second;
}

CertifiedIndex winding_index(const PrincipalForm& form, double cx, double cy, double radius, int samples) {
  return loop_index(form.A, form.B, form.C, plane_sampler(form), cx, cy, radius, samples);
}

Hypotheses check_hypotheses(const BiPoly& f, const LinearFactors& factors) {
  Hypotheses h;
  h.isolated = true;
  h.no_repeated_real_factor = factors.all_simple();
  const int n = f.degree();
  if (n < 3 || factors.factors.empty()) {
    h.coprime_real_factors = true;
    return h;
  }
  const BiPoly fn1 = f.homogeneous_part(n - 1);
  if (fn1.is_zero()) return h;
  h.coprime_real_factors = true;
  const UPoly q = dehomogenize(fn1);
  for (const auto& lf : factors.factors) {
    bool shared = false;
    if (lf.vertical) {
      shared = fn1.coeff({0, n - 1}) == 0;  // u divides f_{n-1}
    } else {
      shared = sign_at_root(q, lf.minimal, lf.root) == 0;
    }
    if (shared) h.coprime_real_factors = false;
  }
  return h;
}

PHLedger ph_check(const BiPoly& f, const Box& box, double tol, int samples) {
  PHLedger L;
  L.n = f.degree();
  const PrincipalForm form = principal_form(f);
  L.factors = real_linear_factors(f.homogeneous_part(L.n));
  L.R = L.factors.R;
  L.hypotheses = check_hypotheses(f, L.factors);
  L.finite = find_finite_umbilics(form, box, tol, samples);
  L.hypotheses.isolated = !L.finite.non_isolated;
  L.sum_halves = 0;
  L.all_certified = true;
  for (const auto& p : L.finite.points) {
    L.sum_halves += p.index_halves;
    L.all_certified = L.all_certified && p.certified;
  }
  L.rhs_halves = 2 - L.R;
  if (!L.hypotheses.all()) {
    L.verdict = "hypotheses-violated";
  } else if (!L.all_certified || L.finite.outside > 0) {
    L.verdict = "inconclusive";
  } else {
    L.verdict = L.sum_halves == L.rhs_halves ? "pass" : "fail";
  }
  return L;
}

}  // namespace umbilic
