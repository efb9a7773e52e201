#pragma once

#include <string>
#include <vector>

#include "umbilic/report.hpp"
#include "umbilic/svg.hpp"

namespace umbilic {

struct Portrait {
  std::vector<Streamline> lines;  // sorted by seed id
  std::vector<Marker> markers;
  SvgOptions svg;
};

/// Curvature lines in the plane over `view`: a grid of about `seeds` seeds plus rings of 16
/// seeds at 5 r_stop around each finite umbilic, both branches, both senses.
Portrait plane_portrait(const Analysis& a, const Region& view, int seeds, const StreamlineOptions& options = {});

/// Curvature lines in the chart around the equator direction of `chart`, in (s, w). Seeds: a
/// grid, points on the equator and rings around the umbilics at infinity seen by the chart.
Portrait chart_portrait(const Analysis& a, const Chart& chart, const Region& view, int seeds,
                        const StreamlineOptions& options = {});

/// Chart coordinates (s, w) of the plane point (x, y) in the chart at angle theta, if finite.
std::optional<Point2> plane_to_chart(double x, double y, double theta);

/// Format of an index in halves: "1", "-1/2", ...
std::string format_halves(int halves);

}  // namespace umbilic
