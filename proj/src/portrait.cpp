#include "umbilic/portrait.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "umbilic/errors.hpp"

namespace umbilic {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point2> grid_seeds(const Region& view, int seeds) {
  const int k = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(seeds)))));
  std::vector<Point2> out;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      out.push_back({view.xmin + (i + 0.5) * (view.xmax - view.xmin) / k,
                     view.ymin + (j + 0.5) * (view.ymax - view.ymin) / k});
    }
  }
  return out;
}

void add_ring(std::vector<Point2>& seeds, const Point2& c, double r) {
  for (int k = 0; k < 16; ++k) {
    const double a = 2 * kPi * (k + 0.5) / 16;
    seeds.push_back({c[0] + r * std::cos(a), c[1] + r * std::sin(a)});
  }
}

// Both branches in both senses from every seed; seeds at umbilics are skipped.
void trace(Portrait& out, const FormSampler& form, const std::vector<Point2>& seeds, const Region& view,
           const std::vector<Point2>& umbilics, const StreamlineOptions& options, const std::string& chart) {
  for (const auto& s : seeds) {
    if (!view.contains(s)) continue;
    for (int branch = 1; branch <= 2; ++branch) {
      for (int sense : {1, -1}) {
        try {
          out.lines.push_back(integrate_streamline(form, s, branch, view, umbilics, options, sense, std::nullopt, chart));
        } catch (const DomainError&) {
        }
      }
    }
  }
}

StreamlineOptions plot_options(StreamlineOptions options, const Region& view) {
  options.max_length = std::min(options.max_length, 3 * view.diameter());
  options.r_stop = std::max(options.r_stop, 1e-3 * view.diameter());
  return options;
}

}  // namespace

std::string format_halves(int halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return std::to_string(halves) + "/2";
}

std::optional<Point2> plane_to_chart(double x, double y, double theta) {
  const double xr = x * std::cos(theta) + y * std::sin(theta);
  const double yr = -x * std::sin(theta) + y * std::cos(theta);
  if (xr == 0.0) return std::nullopt;
  return Point2{yr / xr, 1.0 / xr};
}

Portrait plane_portrait(const Analysis& a, const Region& view, int seeds, const StreamlineOptions& options) {
  Portrait out;
  out.svg.view = view;
  out.svg.title = "curvature lines of the graph of " + a.input;
  const StreamlineOptions opt = plot_options(options, view);
  std::vector<Point2> umbilics;
  std::vector<Point2> seed_points = grid_seeds(view, seeds);
  for (const auto& p : a.ledger.finite.points) {
    umbilics.push_back({p.x, p.y});
    if (view.contains({p.x, p.y})) {
      out.markers.push_back({p.x, p.y, format_halves(p.index_halves), MarkerShape::Circle});
      add_ring(seed_points, {p.x, p.y}, 5 * opt.r_stop);
    }
  }
  trace(out, plane_sampler(principal_form(a.f)), seed_points, view, umbilics, opt, "plane");
  return out;
}

Portrait chart_portrait(const Analysis& a, const Chart& chart, const Region& view, int seeds,
                        const StreamlineOptions& options) {
  Portrait out;
  out.svg.view = view;
  out.svg.equator_line = true;
  out.svg.title = "chart " + chart.id + " for " + a.input;
  const StreamlineOptions opt = plot_options(options, view);
  const auto numeric = std::make_shared<NumericChart>(extended_form(a.f), chart.theta);
  const FormSampler form = [numeric](double s, double w, double* scale) { return numeric->coefficients(s, w, scale); };

  std::vector<Point2> umbilics;
  std::vector<Point2> seed_points = grid_seeds(view, seeds);
  for (const auto& p : a.infinity.umbilics) {
    for (int j = 0; j < 2; ++j) {
      double d = std::remainder(p.theta + j * kPi - chart.theta, 2 * kPi);
      if (std::fabs(d) >= kPi / 2) continue;
      const Point2 q{std::tan(d), 0.0};
      umbilics.push_back(q);
      if (view.contains(q)) {
        out.markers.push_back({q[0], q[1], format_halves(p.index[static_cast<std::size_t>(j)].index_halves),
                               MarkerShape::Diamond});
        add_ring(seed_points, q, 5 * opt.r_stop);
      }
    }
  }
  for (const auto& p : a.ledger.finite.points) {
    const auto q = plane_to_chart(p.x, p.y, chart.theta);
    if (!q) continue;
    umbilics.push_back(*q);
    if (view.contains(*q)) out.markers.push_back({(*q)[0], (*q)[1], format_halves(p.index_halves), MarkerShape::Circle});
  }
  if (view.ymin < 0 && view.ymax > 0) {
    const int k = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(seeds))));
    for (int i = 0; i < k; ++i) seed_points.push_back({view.xmin + (i + 0.5) * (view.xmax - view.xmin) / k, 0.0});
  }
  trace(out, form, seed_points, view, umbilics, opt, chart.id);
  return out;
}

}  // namespace umbilic
