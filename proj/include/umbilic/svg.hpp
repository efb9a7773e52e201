#pragma once

#include <string>
#include <vector>

#include "umbilic/streamline.hpp"

namespace umbilic {

enum class MarkerShape { Circle, Diamond };

struct Marker {
  double x = 0.0;
  double y = 0.0;
  std::string label;
  MarkerShape shape = MarkerShape::Circle;
};

struct SvgOptions {
  Region view;
  int width = 800;
  int height = 800;
  std::string title;
  bool equator_line = false;  // draw w = 0 (chart portraits)
};

/// SVG 1.1 document: axes, streamlines as polylines (branch 1 blue, branch 2 red), finite
/// umbilics as filled circles and umbilics at infinity as diamonds, each with its label.
std::string render_svg(const std::vector<Streamline>& lines, const std::vector<Marker>& markers,
                       const SvgOptions& options);

}  // namespace umbilic
