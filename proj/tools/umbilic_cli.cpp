// Command-line front end: analyze, infinity, check-ph, identities, plot-plane, plot-chart.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "umbilic/errors.hpp"
#include "umbilic/parse.hpp"
#include "umbilic/portrait.hpp"
#include "umbilic/report.hpp"

namespace {

using namespace umbilic;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitHypotheses = 3;
constexpr int kExitInternal = 4;

struct Flags {
  std::string poly;
  std::string box;
  double tol = kDefaultTol;
  std::string chart = "u+";
  std::string svg_out;
  std::string json_out;
  int seeds = 64;
  int samples = kDefaultSamples;
  bool timing = false;
};

Box parse_box(const std::string& text) {
  Box b;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &b.xmin, &b.xmax, &b.ymin, &b.ymax, &tail) != 4 ||
      !(b.xmin < b.xmax) || !(b.ymin < b.ymax)) {
    throw DomainError("--box expects x0,x1,y0,y1 with x0 < x1 and y0 < y1");
  }
  return b;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << text;
}

AnalysisOptions analysis_options(const Flags& fl) {
  AnalysisOptions o;
  if (!fl.box.empty()) o.box = parse_box(fl.box);
  if (!(fl.tol > 0)) throw DomainError("--tol must be positive");
  if (fl.samples < kMinWindingSamples) throw DomainError("--samples must be at least 256");
  o.tol = fl.tol;
  o.samples = fl.samples;
  return o;
}

int hypotheses_exit(const Analysis& a) { return a.hypotheses_hold() ? kExitOk : kExitHypotheses; }

int run(const std::string& command, const Flags& fl) {
  if (command == "identities") {
    const BiPoly f = parse_poly(fl.poly);
    if (f.degree() < 2) throw DomainError("the polynomial must have degree at least 2");
    const IdentityReport r = check_identities(f);
    write_out(fl.json_out, dump_json(json{{"input", fl.poly}, {"n", f.degree()}, {"identities", identities_json(r)}}));
    return r.all() ? kExitOk : kExitInternal;
  }
  const Analysis a = analyze(fl.poly, analysis_options(fl));
  if (command == "analyze") {
    write_out(fl.json_out, dump_json(report_json(a, fl.timing)));
    return hypotheses_exit(a);
  }
  if (command == "check-ph") {
    json j = {{"input", a.input}, {"n", a.n}, {"R", a.ledger.R}, {"finite_umbilics", finite_json(a.ledger.finite)},
              {"ph", ph_json(a.ledger)}};
    write_out(fl.json_out, dump_json(j));
    return hypotheses_exit(a);
  }
  if (command == "infinity") {
    const json full = report_json(a, false);
    json j = {{"input", a.input}, {"n", a.n}, {"R", a.ledger.R}, {"factors", full["factors"]},
              {"infinity_umbilics", full["infinity_umbilics"]}, {"infinity", full["infinity"]},
              {"sphere", full["sphere"]}};
    write_out(fl.json_out, dump_json(j));
    return hypotheses_exit(a);
  }
  if (command == "plot-plane" || command == "plot-chart") {
    if (fl.seeds < 1) throw DomainError("--seeds must be positive");
    Portrait p;
    if (command == "plot-plane") {
      const Box b = fl.box.empty() ? Box{-2, 2, -2, 2} : parse_box(fl.box);
      p = plane_portrait(a, Region{b.xmin, b.xmax, b.ymin, b.ymax}, fl.seeds);
    } else {
      const Box b = fl.box.empty() ? Box{-1, 1, -1, 1} : parse_box(fl.box);
      p = chart_portrait(a, Chart::parse(fl.chart), Region{b.xmin, b.xmax, b.ymin, b.ymax}, fl.seeds);
    }
    write_out(fl.svg_out, render_svg(p.lines, p.markers, p.svg));
    if (!fl.json_out.empty()) write_out(fl.json_out, dump_json(report_json(a, fl.timing)));
    return kExitOk;
  }
  throw DomainError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Umbilic points of polynomial graphs, finite and at infinity"};
  app.require_subcommand(1);
  Flags fl;
  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "full JSON report"},
      {"infinity", "umbilics at infinity with certificates and indices"},
      {"check-ph", "finite umbilics and the index sum against 1 - R/2"},
      {"identities", "exact identities of the extended form"},
      {"plot-plane", "SVG portrait of the curvature lines in the plane"},
      {"plot-chart", "SVG portrait in a chart of the sphere at the equator"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--poly", fl.poly, "polynomial in x, y")->required();
    sub->add_option("--box", fl.box, "x0,x1,y0,y1");
    sub->add_option("--tol", fl.tol, "umbilic residual tolerance");
    sub->add_option("--chart", fl.chart, "u+|u-|v+|v-|rot:<deg>");
    sub->add_option("--svg-out", fl.svg_out, "SVG output path (default stdout)");
    sub->add_option("--json-out", fl.json_out, "JSON output path (default stdout)");
    sub->add_option("--seeds", fl.seeds, "streamline seeds");
    sub->add_option("--samples", fl.samples, "winding samples");
    sub->add_flag("--timing", fl.timing, "report timing_ms");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, fl);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
