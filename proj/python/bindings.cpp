#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "rgeom/harness.hpp"

namespace py = pybind11;
using namespace rgeom;
using nlohmann::json;

namespace {

// JSON documents cross the boundary as strings; the python wrapper
// re-parses them. Keeps the module free of a json<->dict bridge.
std::string run_reports(std::vector<CheckReport> reports) {
  return reports_to_json(reports).dump();
}

py::dict curvature_dict(const Chart& chart, const PointCoords& p) {
  PointGeometry geo = point_geometry(chart, p, 2);
  const int n = chart.dim();
  py::list gamma, ric;
  for (int k = 0; k < n; ++k) {
    py::list rows;
    for (int i = 0; i < n; ++i) {
      py::list row;
      for (int j = 0; j < n; ++j) row.append(geo.gamma.at(k, i, j));
      rows.append(row);
    }
    gamma.append(rows);
  }
  for (int i = 0; i < n; ++i) {
    py::list row;
    for (int j = 0; j < n; ++j) row.append(geo.ric.at(i, j));
    ric.append(row);
  }
  py::dict out;
  out["chart"] = chart.name();
  out["gamma"] = gamma;
  out["ricci"] = ric;
  out["scalar"] = geo.s;
  return out;
}

}  // namespace

PYBIND11_MODULE(_rgeom, m) {
  m.doc() = "chart-based Riemannian geometry verification engine";

  py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
  py::register_exception<EvalDomainError>(m, "DomainError",
                                          PyExc_ArithmeticError);
  py::register_exception<ChartError>(m, "ChartError", PyExc_ValueError);
  py::register_exception<ManifestError>(m, "ManifestError", PyExc_ValueError);

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog_entries()) names.push_back(e.name);
    return names;
  });

  m.def(
      "catalog_manifest_json",
      [](const std::string& entry) {
        const CatalogEntry* e = find_catalog_entry(entry);
        if (!e) throw ManifestError("unknown catalog entry '" + entry + "'");
        return manifest_to_json(manifest_from_entry(*e)).dump();
      },
      py::arg("entry"), "golden manifest of a catalog entry, as a JSON string");

  m.def(
      "check_manifest_json",
      [](const std::string& doc) {
        json parsed;
        try {
          parsed = json::parse(doc);
        } catch (const json::exception& e) {
          throw ManifestError(std::string("not valid JSON: ") + e.what());
        }
        return run_reports(run_manifest(parse_manifest(parsed)));
      },
      py::arg("manifest_json"),
      "run the checks of a manifest given as a JSON string; returns the "
      "report as a JSON string");

  m.def(
      "check_manifest_file",
      [](const std::string& path) {
        return run_reports(run_manifest(load_manifest(path)));
      },
      py::arg("path"));

  m.def(
      "curvature",
      [](const std::string& entry, const PointCoords& at) {
        const CatalogEntry* e = find_catalog_entry(entry);
        if (!e) throw ManifestError("unknown catalog entry '" + entry + "'");
        if (static_cast<int>(at.size()) != e->chart->dim())
          throw ChartError("expected " + std::to_string(e->chart->dim()) +
                           " coordinates");
        return curvature_dict(*e->chart, at);
      },
      py::arg("entry"), py::arg("at"),
      "Christoffel symbols, Ricci tensor and scalar curvature of a catalog "
      "chart at a point");

  m.def(
      "derivative",
      [](const std::string& expr, const std::vector<std::string>& coords,
         const std::string& with_respect_to) {
        auto it = std::find(coords.begin(), coords.end(), with_respect_to);
        if (it == coords.end())
          throw ParseError("unknown coordinate '" + with_respect_to + "'", 0);
        Expr e = parse_expr(expr, coords);
        return e.diff(static_cast<int>(it - coords.begin())).to_string();
      },
      py::arg("expr"), py::arg("coords"), py::arg("with_respect_to"),
      "symbolic partial derivative of a component expression");

  m.def(
      "evaluate",
      [](const std::string& expr, const std::vector<std::string>& coords,
         const PointCoords& at) {
        return parse_expr(expr, coords).eval(at);
      },
      py::arg("expr"), py::arg("coords"), py::arg("at"));

  m.def("selftest_json", [] {
    std::vector<CheckReport> reports;
    for (const CatalogEntry& entry : catalog_entries())
      for (CheckReport r : run_manifest(manifest_from_entry(entry))) {
        r.id = entry.name + "/" + r.id;
        reports.push_back(std::move(r));
      }
    return run_reports(std::move(reports));
  });
}
