#pragma once

#include <map>

#include "rgeom/manifest.hpp"

namespace rgeom {

// Aggregated result of one check over its sample set. `pass` is defined
// as max_gnorm <= tolerance; golden negative instances carry
// expect_fail and are judged through ok().
struct CheckReport {
  std::string id;
  std::string kind;
  std::string field;
  std::string chart;
  int points = 0;
  double max_gnorm = 0.0;
  double rms = 0.0;
  PointCoords worst_point;
  double tolerance = 0.0;
  bool pass = false;
  bool expect_fail = false;
  std::string soliton_class;             // soliton checks only
  std::map<std::string, double> extra;   // diagnostics, route gaps
  std::string error;                     // resolution/evaluation failure

  bool ok() const { return error.empty() && pass != expect_fail; }
};

// Default tolerance per check kind: 1e-6 for the third-derivative checks
// (bianchi, hamilton_identity), 1e-8 otherwise.
double default_tolerance(const std::string& kind);

// Deterministic sample points for a chart: the chart's own grid (cell
// centers) or, when a halton override is given, a seeded Halton sequence
// inside the domain box.
std::vector<PointCoords> sample_domain(
    const Chart& chart, const std::optional<SamplingConfig>& sampling);

// Runs every check of a manifest; one report per check, errors confined
// to the check they occur in.
std::vector<CheckReport> run_manifest(const Manifest& m);

nlohmann::json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);

bool all_ok(const std::vector<CheckReport>& reports);
// True if some check recorded an evaluation error (vs a tolerance fail).
bool any_error(const std::vector<CheckReport>& reports);

}  // namespace rgeom
