#include "umbilic/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "umbilic/errors.hpp"
#include "umbilic/parse.hpp"

namespace umbilic {

using nlohmann::json;

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

Analysis analyze(const std::string& input, const AnalysisOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  Analysis a;
  a.input = input;
  a.f = parse_poly(input);
  a.n = a.f.degree();
  if (a.n < 2) throw DomainError("the polynomial must have degree at least 2");
  a.ledger = ph_check(a.f, options.box, options.tol, options.samples);
  a.infinity = infinity_umbilics(a.f);
  compute_infinity_indices(a.f, a.infinity, a.ledger.finite.points, options.samples);
  a.counts = count_bounds(a.f, a.infinity);
  a.balance = sphere_balance(a.ledger.finite.points, a.infinity);
  a.identities = check_identities(a.f);
  a.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return a;
}

json algebraic_json(const AlgebraicValue& v) {
  json j;
  j["approx"] = round12(v.approx);
  j["exact"] = v.exact ? json(to_string(*v.exact)) : json(nullptr);
  j["sign"] = v.sign;
  return j;
}

json certificate_json(const LemonCertificate& c) {
  json j;
  j["applicable"] = c.applicable;
  j["a"] = algebraic_json(c.a);
  j["b"] = algebraic_json(c.b);
  j["const_C"] = algebraic_json(c.const_C);
  j["lin_B_v"] = algebraic_json(c.lin_B_v);
  j["lin_B_w"] = algebraic_json(c.lin_B_w);
  j["lin_T_v"] = algebraic_json(c.lin_T_v);
  j["lin_T_w"] = algebraic_json(c.lin_T_w);
  j["normalized_det"] = round12(c.normalized_det);
  j["flat"] = c.flat;
  j["const_C_matches"] = c.const_C_matches;
  j["lin_B_matches"] = c.lin_B_matches;
  j["lin_B_w_corrected"] = c.lin_B_w_corrected;
  j["lin_T_matches"] = c.lin_T_matches;
  j["positive_definite"] = c.positive_definite;
  j["det_matches"] = c.det_matches;
  j["all"] = c.all();
  return j;
}

json identities_json(const IdentityReport& r) {
  return json{{"euler", r.euler},
              {"omega_divisibility", r.omega_divisibility},
              {"equator_uAvB", r.equator_uAvB},
              {"equator_uBvC", r.equator_uBvC},
              {"equator_T", r.equator_T},
              {"hf_restriction", r.hf_restriction},
              {"hessian_degree", r.hessian_degree},
              {"homogeneity", r.homogeneity},
              {"all", r.all()}};
}

json finite_json(const FiniteSearch& s) {
  json arr = json::array();
  for (const auto& p : s.points) {
    arr.push_back(json{{"x", round12(p.x)},
                       {"y", round12(p.y)},
                       {"index_num_halves", p.index_halves},
                       {"residuals", {round12(p.residuals[0]), round12(p.residuals[1]), round12(p.residuals[2])}},
                       {"relative_residual", round12(p.relative_residual)},
                       {"winding_radius", round12(p.winding_radius)},
                       {"certified", p.certified},
                       {"isolated_suspect", p.isolated_suspect}});
  }
  return arr;
}

json infinity_json(const InfinitySearch& s) {
  json arr = json::array();
  for (const auto& p : s.umbilics) {
    json j;
    j["theta"] = round12(p.theta);
    j["source"] = to_string(p.source);
    j["hf_sign"] = p.hf.sign;
    j["hf_unit_value"] = round12(p.hf.unit_value);
    j["hf_closed_form"] = algebraic_json(p.hf.closed_form);
    j["hf_matches"] = p.hf.matches;
    j["flat"] = p.flat;
    j["index_num_halves"] = p.index[0].index_halves;
    j["antipode_index_num_halves"] = p.index[1].index_halves;
    j["index_certified"] = p.index[0].certified && p.index[1].certified;
    j["index_radius"] = {round12(p.index_radius[0]), round12(p.index_radius[1])};
    j["type"] = p.type;
    j["certificate"] = p.source == InfinitySource::LinearFactor ? certificate_json(p.certificate) : json(nullptr);
    arr.push_back(j);
  }
  return arr;
}

json ph_json(const PHLedger& l) {
  const Box& b = l.finite.box;
  return json{{"sum_halves", l.sum_halves},
              {"rhs_halves", l.rhs_halves},
              {"verdict", l.verdict},
              {"all_certified", l.all_certified},
              {"box", {round12(b.xmin), round12(b.xmax), round12(b.ymin), round12(b.ymax)}},
              {"outside", l.finite.outside},
              {"hypotheses",
               {{"no_repeated_real_factor", l.hypotheses.no_repeated_real_factor},
                {"coprime_real_factors", l.hypotheses.coprime_real_factors},
                {"isolated", l.hypotheses.isolated},
                {"all", l.hypotheses.all()}}}};
}

json report_json(const Analysis& a, bool timing) {
  json j;
  j["input"] = a.input;
  j["polynomial"] = to_string(a.f);
  j["n"] = a.n;
  json parts = json::object();
  for (int d = a.n; d >= 0; --d) {
    const BiPoly p = a.f.homogeneous_part(d);
    if (!p.is_zero()) parts[std::to_string(d)] = to_string(p);
  }
  j["homogeneous_parts"] = parts;
  j["R"] = a.ledger.R;
  json factors = json::array();
  for (const auto& lf : a.ledger.factors.factors) {
    factors.push_back(json{{"theta", round12(lf.theta)}, {"multiplicity", lf.multiplicity}, {"vertical", lf.vertical}});
  }
  j["factors"] = factors;
  j["finite_umbilics"] = finite_json(a.ledger.finite);
  j["infinity_umbilics"] = infinity_json(a.infinity);
  j["infinity"] = {{"repeated_factor", a.infinity.repeated_factor},
                   {"coprime", a.infinity.coprime},
                   {"whole_equator", a.infinity.whole_equator},
                   {"bracket_directions", a.infinity.bracket_directions},
                   {"non_umbilic_samples_ok", a.infinity.non_umbilic_samples_ok},
                   {"fields_swap_on_lower_hemisphere", a.n % 2 == 1},
                   {"count", a.counts.count},
                   {"count_bound", a.counts.bound},
                   {"hessian_curve_compact", a.counts.compact},
                   {"count_ok", a.counts.ok}};
  j["sphere"] = {{"applicable", a.balance.applicable},
                 {"finite_halves", a.balance.finite_halves},
                 {"equator_halves", a.balance.equator_halves},
                 {"total_halves", a.balance.total_halves},
                 {"closes", a.balance.closes}};
  j["ph"] = ph_json(a.ledger);
  j["identities"] = identities_json(a.identities);
  j["timing_ms"] = timing ? json(round12(a.timing_ms)) : json(nullptr);
  return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace umbilic
