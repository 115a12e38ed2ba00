#pragma once

#include <nlohmann/json_fwd.hpp>

#include "rgeom/catalog.hpp"

namespace rgeom {

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sampling override: either a per-chart grid (the chart's own domain grid)
// or a seeded Halton sequence with a fixed count.
struct SamplingConfig {
  std::string strategy = "grid";  // "grid" | "halton"
  int count = 100;                // halton only
  unsigned seed = 42;             // halton only
};

// A parsed verification manifest: charts, fields, and check requests.
struct Manifest {
  int version = 1;
  std::vector<std::shared_ptr<const Chart>> charts;
  std::vector<FieldDef> fields;
  std::vector<CheckRequest> checks;
  std::optional<SamplingConfig> sampling;

  std::shared_ptr<const Chart> find_chart(const std::string& name) const;
  const FieldDef* find_field(const std::string& name) const;
};

// Parses and validates a manifest document; throws ManifestError on any
// structural problem (the whole document is rejected).
Manifest parse_manifest(const nlohmann::json& doc);
Manifest load_manifest(const std::string& path);

// Serialization; round-trips through parse_manifest.
nlohmann::json manifest_to_json(const Manifest& m);

// Builds the golden manifest of one catalog entry (chart + aux charts,
// fields, checks), suitable for export and user modification.
Manifest manifest_from_entry(const CatalogEntry& entry);

}  // namespace rgeom
