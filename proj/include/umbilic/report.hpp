#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "umbilic/finite.hpp"
#include "umbilic/infinity.hpp"
#include "umbilic/sphere.hpp"

namespace umbilic {

struct AnalysisOptions {
  Box box;
  double tol = kDefaultTol;
  int samples = kDefaultSamples;
};

/// Everything known about one polynomial: finite umbilics and the index ledger, umbilics at
/// infinity with certificates and indices, count bounds, the sphere balance and the identities.
struct Analysis {
  std::string input;
  BiPoly f;
  int n = 0;
  PHLedger ledger;
  InfinitySearch infinity;
  CountBounds counts;
  SphereBalance balance;
  IdentityReport identities;
  double timing_ms = 0.0;

  bool hypotheses_hold() const { return ledger.hypotheses.all(); }
};

/// Parses and analyzes. Throws ParseError on bad text and DomainError when deg f < 2.
Analysis analyze(const std::string& input, const AnalysisOptions& options = {});

/// Rounds to 12 significant digits so reports print stably.
double round12(double v);

nlohmann::json algebraic_json(const AlgebraicValue& v);
nlohmann::json certificate_json(const LemonCertificate& c);
nlohmann::json identities_json(const IdentityReport& r);
nlohmann::json finite_json(const FiniteSearch& s);
nlohmann::json infinity_json(const InfinitySearch& s);
nlohmann::json ph_json(const PHLedger& l);

/// The full report. Keys are sorted; timing_ms is null unless `timing`.
nlohmann::json report_json(const Analysis& a, bool timing);

/// Two-space indented text with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace umbilic
