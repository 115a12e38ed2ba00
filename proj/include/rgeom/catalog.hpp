#pragma once

#include <vector>

#include "rgeom/field.hpp"
#include "rgeom/soliton.hpp"

namespace rgeom {

// One verification request, as it appears in a manifest.
struct CheckRequest {
  std::string id;
  std::string kind;   // killing | conformal | holomorphic | iht | soliton |
                      // gradient_soliton | trace_identity | hamilton_identity |
                      // bianchi | yano_routes | lie_routes | tension
  std::string field;  // empty for bianchi
  std::string chart;  // bianchi only
  double lambda = 0.0;
  double tolerance = 0.0;  // 0 = harness default for the kind
  bool expect_fail = false;  // golden negative instances
};

// Expected classification of a catalog soliton.
struct ClassExpectation {
  std::string label;  // for reporting
  double lambda = 0.0;
  SolitonClass expected = SolitonClass::Steady;
};

// A built-in chart with fields, golden checks, and provenance notes.
// These entries are the ground-truth corpus for the acceptance suite.
struct CatalogEntry {
  std::string name;
  std::shared_ptr<const Chart> chart;
  std::vector<std::shared_ptr<const Chart>> aux_charts;  // map targets
  std::vector<FieldDef> fields;
  std::vector<CheckRequest> checks;
  std::vector<ClassExpectation> classifications;
  std::string provenance;

  const FieldDef* find_field(const std::string& name) const;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* find_catalog_entry(const std::string& name);

}  // namespace rgeom
