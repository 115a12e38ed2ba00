#include "rgeom/manifest.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace rgeom {

namespace {

using nlohmann::json;

const std::set<std::string> kCheckKinds = {
    "killing",          "conformal",      "holomorphic",
    "iht",              "soliton",        "gradient_soliton",
    "trace_identity",   "hamilton_identity", "bianchi",
    "yano_routes",      "lie_routes",     "tension"};

std::vector<std::vector<std::string>> parse_matrix(const json& j,
                                                   const char* what) {
  if (!j.is_array()) throw ManifestError(std::string(what) + " must be array");
  std::vector<std::vector<std::string>> rows;
  for (const json& r : j) {
    if (!r.is_array())
      throw ManifestError(std::string(what) + " rows must be arrays");
    rows.push_back(r.get<std::vector<std::string>>());
  }
  return rows;
}

}  // namespace

std::shared_ptr<const Chart> Manifest::find_chart(
    const std::string& name) const {
  for (const auto& c : charts)
    if (c->name() == name) return c;
  return nullptr;
}

const FieldDef* Manifest::find_field(const std::string& name) const {
  for (const FieldDef& f : fields)
    if (f.name() == name) return &f;
  return nullptr;
}

Manifest parse_manifest(const json& doc) {
  if (!doc.is_object()) throw ManifestError("manifest must be a JSON object");
  Manifest m;
  m.version = doc.value("version", 0);
  if (m.version != 1)
    throw ManifestError("unrecognized manifest version " +
                        std::to_string(m.version));

  if (!doc.contains("charts") || !doc["charts"].is_array())
    throw ManifestError("manifest needs a 'charts' array");
  for (const json& jc : doc["charts"]) {
    try {
      DomainBox dom;
      const json& jd = jc.at("domain");
      dom.lo = jd.at("lo").get<std::vector<double>>();
      dom.hi = jd.at("hi").get<std::vector<double>>();
      dom.grid = jd.at("grid").get<std::vector<int>>();
      dom.strategy = jd.value("strategy", "grid");
      std::optional<std::vector<std::vector<std::string>>> J;
      if (jc.contains("complex_structure"))
        J = parse_matrix(jc["complex_structure"], "complex_structure");
      m.charts.push_back(std::make_shared<Chart>(
          jc.at("name").get<std::string>(),
          jc.at("coords").get<std::vector<std::string>>(),
          parse_matrix(jc.at("metric"), "metric"), dom, J));
    } catch (const json::exception& e) {
      throw ManifestError(std::string("bad chart definition: ") + e.what());
    } catch (const ParseError& e) {
      throw ManifestError(std::string("bad chart expression: ") + e.what());
    } catch (const ChartError& e) {
      throw ManifestError(std::string("bad chart: ") + e.what());
    }
  }

  if (doc.contains("fields")) {
    for (const json& jf : doc["fields"]) {
      try {
        std::string chart_name = jf.at("chart").get<std::string>();
        auto chart = m.find_chart(chart_name);
        if (!chart)
          throw ManifestError("field references undefined chart '" +
                              chart_name + "'");
        FieldKind kind = field_kind_from_string(jf.at("kind"));
        std::shared_ptr<const Chart> target;
        if (kind == FieldKind::Map) {
          std::string tname = jf.at("target").get<std::string>();
          target = m.find_chart(tname);
          if (!target)
            throw ManifestError("map field references undefined target '" +
                                tname + "'");
        }
        m.fields.emplace_back(jf.at("name").get<std::string>(), chart, kind,
                              jf.at("components").get<std::vector<std::string>>(),
                              target);
      } catch (const json::exception& e) {
        throw ManifestError(std::string("bad field definition: ") + e.what());
      } catch (const ParseError& e) {
        throw ManifestError(std::string("bad field expression: ") + e.what());
      } catch (const std::invalid_argument& e) {
        throw ManifestError(std::string("bad field: ") + e.what());
      }
    }
  }

  if (!doc.contains("checks") || !doc["checks"].is_array())
    throw ManifestError("manifest needs a 'checks' array");
  int idx = 0;
  for (const json& jk : doc["checks"]) {
    CheckRequest c;
    try {
      c.kind = jk.at("kind").get<std::string>();
    } catch (const json::exception&) {
      throw ManifestError("check without 'kind'");
    }
    if (!kCheckKinds.count(c.kind))
      throw ManifestError("unknown check kind '" + c.kind + "'");
    c.field = jk.value("field", "");
    c.chart = jk.value("chart", "");
    c.lambda = jk.value("lambda", 0.0);
    c.tolerance = jk.value("tolerance", 0.0);
    c.expect_fail = jk.value("expect", "pass") == "fail";
    c.id = jk.value("id", c.kind + "#" + std::to_string(idx));
    if (c.tolerance < 0.0)
      throw ManifestError("check '" + c.id + "': tolerance must be > 0");
    if (c.kind == "bianchi") {
      if (c.chart.empty() && m.charts.size() == 1) c.chart = m.charts[0]->name();
      if (c.chart.empty())
        throw ManifestError("bianchi check needs a 'chart'");
    } else if (c.field.empty()) {
      throw ManifestError("check '" + c.id + "' needs a 'field'");
    }
    m.checks.push_back(std::move(c));
    ++idx;
  }

  if (doc.contains("sampling")) {
    const json& js = doc["sampling"];
    SamplingConfig sc;
    sc.strategy = js.value("strategy", "grid");
    sc.count = js.value("count", 100);
    sc.seed = js.value("seed", 42u);
    if (sc.strategy != "grid" && sc.strategy != "halton")
      throw ManifestError("unknown sampling strategy '" + sc.strategy + "'");
    if (sc.count <= 0) throw ManifestError("sampling count must be positive");
    m.sampling = sc;
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
  }
  return parse_manifest(doc);
}

json manifest_to_json(const Manifest& m) {
  json doc;
  doc["version"] = m.version;
  doc["charts"] = json::array();
  for (const auto& c : m.charts) {
    json jc;
    jc["name"] = c->name();
    jc["coords"] = c->coords();
    const int n = c->dim();
    json metric = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j)
        row.push_back(j >= i ? c->metric_src(i, j) : std::string());
      metric.push_back(row);
    }
    jc["metric"] = metric;
    if (c->has_complex_structure()) jc["complex_structure"] = c->complex_src();
    jc["domain"] = {{"lo", c->domain().lo},
                    {"hi", c->domain().hi},
                    {"grid", c->domain().grid},
                    {"strategy", c->domain().strategy}};
    doc["charts"].push_back(jc);
  }
  doc["fields"] = json::array();
  for (const FieldDef& f : m.fields) {
    json jf;
    jf["name"] = f.name();
    jf["chart"] = f.chart().name();
    jf["kind"] = to_string(f.kind());
    jf["components"] = f.component_src();
    if (f.has_target()) jf["target"] = f.target().name();
    doc["fields"].push_back(jf);
  }
  doc["checks"] = json::array();
  for (const CheckRequest& c : m.checks) {
    json jk;
    jk["id"] = c.id;
    jk["kind"] = c.kind;
    if (!c.field.empty()) jk["field"] = c.field;
    if (c.kind == "bianchi") jk["chart"] = c.chart;
    if (c.kind == "soliton" || c.kind == "gradient_soliton" ||
        c.kind == "trace_identity")
      jk["lambda"] = c.lambda;
    if (c.tolerance > 0.0) jk["tolerance"] = c.tolerance;
    if (c.expect_fail) jk["expect"] = "fail";
    doc["checks"].push_back(jk);
  }
  if (m.sampling) {
    doc["sampling"] = {{"strategy", m.sampling->strategy},
                       {"count", m.sampling->count},
                       {"seed", m.sampling->seed}};
  }
  return doc;
}

Manifest manifest_from_entry(const CatalogEntry& entry) {
  Manifest m;
  m.charts.push_back(entry.chart);
  for (const auto& c : entry.aux_charts) m.charts.push_back(c);
  m.fields = entry.fields;
  m.checks = entry.checks;
  for (CheckRequest& c : m.checks)
    if (c.kind == "bianchi" && c.chart.empty()) c.chart = entry.chart->name();
  return m;
}

}  // namespace rgeom
