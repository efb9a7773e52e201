#include "umbilic/svg.hpp"

#include <cstdio>
#include <sstream>

namespace umbilic {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  const SvgOptions& o;
  double px(double x) const { return (x - o.view.xmin) / (o.view.xmax - o.view.xmin) * o.width; }
  double py(double y) const { return (o.view.ymax - y) / (o.view.ymax - o.view.ymin) * o.height; }
};

}  // namespace

std::string render_svg(const std::vector<Streamline>& lines, const std::vector<Marker>& markers,
                       const SvgOptions& options) {
  const Frame fr{options};
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width << "\" height=\""
    << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
  if (!options.title.empty()) s << "<title>" << escape(options.title) << "</title>\n";
  s << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
    << "\" fill=\"white\"/>\n";

  s << "<g id=\"axes\" stroke=\"#999999\" stroke-width=\"1\">\n";
  const Region& v = options.view;
  if (v.xmin <= 0 && v.xmax >= 0) {
    s << "<line x1=\"" << num(fr.px(0)) << "\" y1=\"0\" x2=\"" << num(fr.px(0)) << "\" y2=\"" << options.height
      << "\"/>\n";
  }
  if (v.ymin <= 0 && v.ymax >= 0) {
    s << "<line x1=\"0\" y1=\"" << num(fr.py(0)) << "\" x2=\"" << options.width << "\" y2=\"" << num(fr.py(0))
      << "\"" << (options.equator_line ? " stroke=\"#000000\" stroke-width=\"2\"" : "") << "/>\n";
  }
  s << "</g>\n";

  s << "<g id=\"streamlines\" fill=\"none\" stroke-width=\"1\">\n";
  for (const auto& line : lines) {
    if (line.points.size() < 2) continue;
    s << "<polyline stroke=\"" << (line.branch == 1 ? "#1f4fbf" : "#c0392b") << "\" points=\"";
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      if (i != 0) s << ' ';
      s << num(fr.px(line.points[i][0])) << ',' << num(fr.py(line.points[i][1]));
    }
    s << "\"/>\n";
  }
  s << "</g>\n";

  s << "<g id=\"umbilics\">\n";
  for (const auto& m : markers) {
    const double x = fr.px(m.x);
    const double y = fr.py(m.y);
    if (m.shape == MarkerShape::Circle) {
      s << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"5\" fill=\"#000000\"/>\n";
    } else {
      s << "<polygon points=\"" << num(x) << ',' << num(y - 7) << ' ' << num(x + 7) << ',' << num(y) << ' '
        << num(x) << ',' << num(y + 7) << ' ' << num(x - 7) << ',' << num(y) << "\" fill=\"#2e8b57\"/>\n";
    }
    if (!m.label.empty()) {
      s << "<text x=\"" << num(x + 8) << "\" y=\"" << num(y - 8) << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << escape(m.label) << "</text>\n";
    }
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace umbilic
