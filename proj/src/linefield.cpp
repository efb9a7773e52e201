#include "umbilic/linefield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace umbilic {

namespace {

constexpr double kPi = std::numbers::pi;

double line_angle(double x, double y) {
  double t = std::atan2(y, x);
  if (t < 0) t += kPi;
  if (t >= kPi) t -= kPi;
  return t;
}

}  // namespace

std::optional<NullDirections> null_directions(double a, double b, double c) {
  if (a == 0 && b == 0 && c == 0) return std::nullopt;
  const double disc = std::max(b * b - 4 * a * c, 0.0);
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  NullDirections d;
  if (q == 0) {
    // b = 0 and ac = 0: a perfect square of one coordinate.
    const double t = (a == 0) ? 0.0 : kPi / 2;
    d.first = d.second = t;
    d.double_root = true;
    return d;
  }
  // c m^2 + b m + a = 0 for m = dy/dx: roots q/c and a/q.
  double t1 = line_angle(c, q);
  double t2 = line_angle(q, a);
  if (t1 > t2) std::swap(t1, t2);
  d.first = t1;
  d.second = t2;
  d.double_root = disc == 0.0;
  return d;
}

double wrap_line_angle(double delta) {
  delta = std::fmod(delta, kPi);
  if (delta > kPi / 2) delta -= kPi;
  if (delta <= -kPi / 2) delta += kPi;
  return delta;
}

double closest_direction(const NullDirections& d, double reference) {
  const double e1 = std::fabs(wrap_line_angle(d.first - reference));
  const double e2 = std::fabs(wrap_line_angle(d.second - reference));
  return e1 <= e2 ? d.first : d.second;
}

Winding winding_number(const FormSampler& form, double cx, double cy, double radius, int samples) {
  // The linear homotopy from the form to its trace-free part (a - c)/2 (dx^2 - dy^2) + b dx dy
  // only raises the discriminant, so the line field index in halves is the degree of
  // (a - c, b) along the loop. Counting that degree avoids branch tracking, which jumps when
  // the two null directions nearly coincide in the Euclidean picture.
  Winding w;
  int count = std::max(samples, kMinWindingSamples);
  for (;;) {
    double total = 0.0;
    double max_step = 0.0;
    double min_disc = 1.0;
    bool defined = true;
    double px = 0.0, py = 0.0;
    for (int k = 0; k <= count; ++k) {
      const double phi = 2 * kPi * static_cast<double>(k % count) / count;
      const auto coef = form(cx + radius * std::cos(phi), cy + radius * std::sin(phi), nullptr);
      const double vx = coef[0] - coef[2];
      const double vy = coef[1];
      if (vx == 0 && vy == 0) {
        defined = false;
        break;
      }
      const double denom = coef[1] * coef[1] + 4 * std::fabs(coef[0] * coef[2]);
      if (denom > 0) min_disc = std::min(min_disc, (coef[1] * coef[1] - 4 * coef[0] * coef[2]) / denom);
      if (k > 0) {
        const double step = std::atan2(px * vy - py * vx, px * vx + py * vy);
        total += step;
        max_step = std::max(max_step, std::fabs(step));
      }
      px = vx;
      py = vy;
    }
    w.samples = count;
    w.max_step = defined ? max_step : kPi;
    w.min_discriminant = min_disc;
    w.index_halves = static_cast<int>(std::lround(total / (2 * kPi)));
    if (defined && max_step < kPi / 8) {
      w.converged = true;
      return w;
    }
    if (!defined || count >= kMaxWindingSamples) {
      w.converged = false;
      return w;
    }
    count *= 2;
  }
}

CertifiedIndex certified_index(const FormSampler& form, double cx, double cy, double radius, int samples) {
  CertifiedIndex out;
  out.radius = radius;
  out.outer = winding_number(form, cx, cy, radius, samples);
  out.inner = winding_number(form, cx, cy, radius / 2, samples);
  out.index_halves = out.outer.index_halves;
  out.certified = out.outer.converged && out.inner.converged &&
                  out.outer.index_halves == out.inner.index_halves;
  return out;
}

}  // namespace umbilic
