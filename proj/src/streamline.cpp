#include "umbilic/streamline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "umbilic/errors.hpp"

namespace umbilic {

namespace {

// Unit tangent of the field at p aligned with `ref`, or nothing where the form vanishes.
std::optional<Point2> tangent(const FormSampler& form, const Point2& p, const Point2& ref) {
  double scale = 0.0;
  const auto c = form(p[0], p[1], &scale);
  const double mag = std::max({std::fabs(c[0]), std::fabs(c[1]), std::fabs(c[2])});
  const auto dirs = null_directions(c[0], c[1], c[2]);
  if (!dirs || mag <= 1e-13 * (scale + 1.0)) return std::nullopt;
  const double theta = closest_direction(*dirs, std::atan2(ref[1], ref[0]));
  Point2 d{std::cos(theta), std::sin(theta)};
  if (d[0] * ref[0] + d[1] * ref[1] < 0) d = {-d[0], -d[1]};
  return d;
}

double nearest_umbilic(const Point2& p, const std::vector<Point2>& umbilics) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& u : umbilics) best = std::min(best, std::hypot(p[0] - u[0], p[1] - u[1]));
  return best;
}

// Dormand-Prince tableau.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0};
constexpr double kB4[7] = {5179.0 / 57600, 0, 7571.0 / 16695, 393.0 / 640, -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

}  // namespace

const char* to_string(Termination t) {
  switch (t) {
    case Termination::Boundary: return "boundary";
    case Termination::UmbilicProximity: return "umbilic-proximity";
    case Termination::StepFailure: return "step-failure";
    case Termination::MaxLength: return "max-length";
  }
  return "?";
}

double Region::diameter() const { return std::hypot(xmax - xmin, ymax - ymin); }

Streamline integrate_streamline(const FormSampler& form, const Point2& seed, int branch, const Region& region,
                                const std::vector<Point2>& umbilics, const StreamlineOptions& options,
                                int orientation, std::optional<double> start_angle, const std::string& chart) {
  if (branch != 1 && branch != 2) throw DomainError("branch must be 1 or 2");
  if (nearest_umbilic(seed, umbilics) < options.r_stop) throw DomainError("seed is at an umbilic point");
  double scale = 0.0;
  const auto c0 = form(seed[0], seed[1], &scale);
  const auto dirs = null_directions(c0[0], c0[1], c0[2]);
  if (!dirs || std::max({std::fabs(c0[0]), std::fabs(c0[1]), std::fabs(c0[2])}) <= 1e-13 * (scale + 1.0)) {
    throw DomainError("seed is at an umbilic point");
  }
  const double theta0 = start_angle ? closest_direction(*dirs, *start_angle) : (branch == 1 ? dirs->first : dirs->second);
  const double sense = orientation < 0 ? -1.0 : 1.0;
  Point2 dir{sense * std::cos(theta0), sense * std::sin(theta0)};

  Streamline line;
  line.branch = branch;
  line.chart = chart;
  line.points.push_back(seed);
  const double h_max = options.max_step_fraction * region.diameter();
  const double h_min = 1e-12 * region.diameter();
  double h = std::min(h_max, 0.1 * options.r_stop);
  Point2 p = seed;

  for (int step = 0; step < options.max_steps; ++step) {
    if (line.length >= options.max_length) {
      line.reason = Termination::MaxLength;
      return line;
    }
    h = std::min({h, h_max, options.max_length - line.length});
    std::array<Point2, 7> k{};
    bool ok = true;
    for (int s = 0; s < 7 && ok; ++s) {
      Point2 q = p;
      for (int j = 0; j < s; ++j) {
        q[0] += h * kA[s][j] * k[static_cast<std::size_t>(j)][0];
        q[1] += h * kA[s][j] * k[static_cast<std::size_t>(j)][1];
      }
      const auto t = tangent(form, q, s == 0 ? dir : k[static_cast<std::size_t>(s - 1)]);
      if (!t) {
        ok = false;
        break;
      }
      k[static_cast<std::size_t>(s)] = *t;
    }
    double err = std::numeric_limits<double>::infinity();
    Point2 next = p;
    if (ok) {
      Point2 lo = p;
      for (std::size_t s = 0; s < 7; ++s) {
        next[0] += h * kB5[s] * k[s][0];
        next[1] += h * kB5[s] * k[s][1];
        lo[0] += h * kB4[s] * k[s][0];
        lo[1] += h * kB4[s] * k[s][1];
      }
      err = std::hypot(next[0] - lo[0], next[1] - lo[1]);
    }
    if (!(err <= options.tol)) {
      const double factor = std::isfinite(err) ? std::max(0.1, 0.9 * std::pow(options.tol / err, 0.2)) : 0.25;
      h *= factor;
      if (h < h_min) {
        line.reason = Termination::StepFailure;
        return line;
      }
      continue;
    }
    const double advanced = std::hypot(next[0] - p[0], next[1] - p[1]);
    line.length += advanced;
    dir = k[6];
    p = next;
    line.points.push_back(p);
    if (!region.contains(p)) {
      line.reason = Termination::Boundary;
      return line;
    }
    if (nearest_umbilic(p, umbilics) < options.r_stop) {
      line.reason = Termination::UmbilicProximity;
      return line;
    }
    const double grow = err > 0 ? std::min(5.0, 0.9 * std::pow(options.tol / err, 0.2)) : 5.0;
    h *= std::max(grow, 0.2);
  }
  line.reason = Termination::MaxLength;
  return line;
}

}  // namespace umbilic
