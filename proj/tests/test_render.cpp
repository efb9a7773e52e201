#include <cmath>
#include <memory>
#include <numbers>
#include <regex>

#include "doctest.h"
#include "umbilic/curvature.hpp"
#include "umbilic/errors.hpp"
#include "umbilic/finite.hpp"
#include "umbilic/parse.hpp"
#include "umbilic/portrait.hpp"
#include "umbilic/report.hpp"
#include "umbilic/streamline.hpp"
#include "umbilic/svg.hpp"

using namespace umbilic;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

constexpr double kPi = std::numbers::pi;

FormSampler chart_sampler(const BiPoly& f, double theta) {
  const auto c = std::make_shared<NumericChart>(extended_form(f), theta);
  return [c](double s, double w, double* scale) { return c->coefficients(s, w, scale); };
}

// Every opened element is closed in order (tiny well-formedness oracle).
bool balanced(const std::string& svg) {
  std::vector<std::string> stack;
  const std::regex tag("<(/?)([a-zA-Z]+)[^>]*?(/?)>");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3] == "/") continue;
    if (m[1] == "/") {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    } else {
      stack.push_back(m[2]);
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("curvature lines of the paraboloid are circles") {
  const auto form = plane_sampler(principal_form(P("1/2*x^2+1/2*y^2")));
  StreamlineOptions opt;
  opt.max_length = 2 * kPi;
  const auto line = integrate_streamline(form, {1, 0}, 2, Region{-2, 2, -2, 2}, {{0, 0}}, opt, 1, kPi / 2);
  CHECK(line.points.size() > 50);
  CHECK(line.length == doctest::Approx(2 * kPi).epsilon(1e-6));
  for (const auto& p : line.points) CHECK(std::fabs(std::hypot(p[0], p[1]) - 1) < 1e-4);
}

TEST_CASE("the equator is a curvature line") {
  StreamlineOptions opt;
  opt.max_length = 1;
  const auto line = integrate_streamline(chart_sampler(P("x*y"), 0.3), {0.1, 0}, 1, Region{-2, 2, -1, 1}, {}, opt, 1, 0.0);
  CHECK(line.length == doctest::Approx(1));
  for (const auto& p : line.points) CHECK(std::fabs(p[1]) < 1e-6);
}

TEST_CASE("seed at an umbilic") {
  const auto form = plane_sampler(principal_form(P("1/2*x^2+1/2*y^2")));
  CHECK_THROWS_AS(integrate_streamline(form, {0, 0}, 1, Region{}, {}), DomainError);
  CHECK_THROWS_AS(integrate_streamline(form, {1e-4, 0}, 1, Region{}, {{0, 0}}), DomainError);
}

TEST_CASE("xy net is ruled at 45 degrees") {
  const auto form = plane_sampler(principal_form(P("x*y")));
  // The form is (1 + y^2) dx^2 - (1 + x^2) dy^2, so the lines have slope +-sqrt((1+y^2)/(1+x^2)).
  const auto line = integrate_streamline(form, {0, 0}, 1, Region{-0.5, 0.5, -0.5, 0.5}, {});
  for (std::size_t i = 1; i < line.points.size(); ++i) {
    const auto& a = line.points[i - 1];
    const auto& b = line.points[i];
    const double slope = (b[1] - a[1]) / (b[0] - a[0]);
    const double my = 0.5 * (a[1] + b[1]), mx = 0.5 * (a[0] + b[0]);
    CHECK(std::fabs(slope) == doctest::Approx(std::sqrt((1 + my * my) / (1 + mx * mx))).epsilon(1e-3));
  }
  CHECK(std::fabs(std::atan(line.points[1][1] / line.points[1][0])) == doctest::Approx(kPi / 4).epsilon(1e-3));
}

TEST_CASE("svg documents") {
  SvgOptions opt;
  const std::string empty = render_svg({}, {}, opt);
  CHECK(empty.rfind("<?xml", 0) == 0);
  CHECK(empty.find("svg11.dtd") != std::string::npos);
  CHECK(balanced(empty));
  CHECK(empty.find("<polyline") == std::string::npos);
  Streamline line;
  line.points = {{0, 0}, {0.5, 0.5}};
  const std::string doc = render_svg({line}, {{0.1, 0.2, "-1/2 <a&b>", MarkerShape::Diamond}}, opt);
  CHECK(balanced(doc));
  CHECK(doc.find("<polyline") != std::string::npos);
  CHECK(doc.find("&lt;a&amp;b&gt;") != std::string::npos);
}

TEST_CASE("report is deterministic and sorted") {
  const Analysis a = analyze("x^3 - 3*x*y^2 + x^2 + y^2");
  const std::string one = dump_json(report_json(a, false));
  const std::string two = dump_json(report_json(analyze("x^3 - 3*x*y^2 + x^2 + y^2"), false));
  CHECK(one == two);
  const auto j = nlohmann::json::parse(one);
  CHECK(j["timing_ms"].is_null());
  CHECK(j["R"] == 3);
  CHECK(j["ph"]["sum_halves"] == -1);
  CHECK(j["infinity_umbilics"].size() == 3);
  CHECK(one.find("\"R\"") < one.find("\"factors\""));
  CHECK(report_json(a, true)["timing_ms"].is_number());
  CHECK(round12(0.1 + 0.2) == 0.3);
  CHECK_THROWS_AS(analyze("x^^2"), ParseError);
}

TEST_CASE("portraits") {
  const Analysis a = analyze("x*y");
  const Portrait plane = plane_portrait(a, Region{-1, 1, -1, 1}, 16);
  CHECK(plane.lines.size() == 64);
  const Portrait chart = chart_portrait(a, Chart::axis("u+"), Region{-1, 1, -1, 1}, 16);
  CHECK(chart.markers.size() == 1);
  CHECK(chart.markers[0].shape == MarkerShape::Diamond);
  CHECK(chart.markers[0].label == "1/2");
  CHECK(balanced(render_svg(chart.lines, chart.markers, chart.svg)));
  CHECK(format_halves(-1) == "-1/2");
  CHECK(format_halves(4) == "2");
}
