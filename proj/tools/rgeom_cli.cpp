#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rgeom/harness.hpp"

using namespace rgeom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int run_reports(std::vector<CheckReport> reports, const std::string& format) {
  if (format == "json")
    std::cout << reports_to_json(reports).dump(2) << "\n";
  else
    std::cout << reports_to_text(reports);
  if (any_error(reports)) return kExitNumeric;
  return all_ok(reports) ? kExitOk : kExitCheckFailed;
}

int cmd_check(const std::string& path, double tol, int samples, unsigned seed,
              bool seed_given, const std::string& format) {
  Manifest m;
  try {
    m = load_manifest(path);
  } catch (const ManifestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (tol > 0.0)
    for (CheckRequest& c : m.checks) c.tolerance = tol;
  if (samples > 0) {
    SamplingConfig sc;
    sc.strategy = "halton";
    sc.count = samples;
    sc.seed = seed_given ? seed : (m.sampling ? m.sampling->seed : 42);
    m.sampling = sc;
  } else if (seed_given) {
    SamplingConfig sc = m.sampling.value_or(SamplingConfig{});
    sc.seed = seed;
    m.sampling = sc;
  }
  return run_reports(run_manifest(m), format);
}

int cmd_selftest(const std::string& format) {
  std::vector<CheckReport> reports;
  bool class_ok = true;
  for (const CatalogEntry& entry : catalog_entries()) {
    Manifest m = manifest_from_entry(entry);
    for (CheckReport r : run_manifest(m)) {
      r.id = entry.name + "/" + r.id;
      reports.push_back(std::move(r));
    }
    for (const ClassExpectation& ce : entry.classifications) {
      SolitonSpec spec;
      spec.lambda = ce.lambda;
      if (classify(spec) != ce.expected) {
        std::cerr << "FAIL " << entry.name << "/classify:" << ce.label << "\n";
        class_ok = false;
      }
    }
  }
  int rc = run_reports(std::move(reports), format);
  return class_ok ? rc : std::max(rc, kExitCheckFailed);
}

int cmd_curvature(const std::string& target, const std::string& at) {
  // target is a catalog entry name or <manifest.json>:<chart-name>
  std::shared_ptr<const Chart> chart;
  Manifest m;  // keeps manifest charts alive
  if (const CatalogEntry* entry = find_catalog_entry(target)) {
    chart = entry->chart;
  } else if (auto colon = target.rfind(':');
             colon != std::string::npos && colon > 1) {
    try {
      m = load_manifest(target.substr(0, colon));
    } catch (const ManifestError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    chart = m.find_chart(target.substr(colon + 1));
  }
  if (!chart) {
    std::cerr << "error: unknown chart or catalog entry '" << target << "'\n";
    return kExitUsage;
  }
  PointCoords p;
  std::stringstream ss(at);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      p.push_back(std::stod(tok));
    } catch (const std::exception&) {
      std::cerr << "error: bad coordinate '" << tok << "'\n";
      return kExitUsage;
    }
  }
  if (static_cast<int>(p.size()) != chart->dim()) {
    std::cerr << "error: expected " << chart->dim() << " coordinates\n";
    return kExitUsage;
  }
  try {
    PointGeometry geo = point_geometry(*chart, p, 2);
    const int n = chart->dim();
    std::cout << "chart " << chart->name() << " at (";
    for (int i = 0; i < n; ++i) std::cout << (i ? "," : "") << p[i];
    std::cout << ")\n";
    printf("Christoffel Gamma^k_ij:\n");
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          printf("  Gamma^%d_%d%d = % .12g\n", k, i, j, geo.gamma.at(k, i, j));
    printf("Ricci Ric_ij:\n");
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        printf("  Ric_%d%d = % .12g\n", i, j, geo.ric.at(i, j));
    printf("scalar curvature s = % .12g\n", geo.s);
    return kExitOk;
  } catch (const EvalDomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const ChartError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chart-based Riemannian geometry verification engine"};
  app.require_subcommand(1);

  std::string manifest_path, format = "text";
  double tol = 0.0;
  int samples = 0;
  unsigned seed = 42;
  auto* check = app.add_subcommand("check", "run the checks of a manifest");
  check->add_option("manifest", manifest_path, "manifest JSON path")
      ->required();
  check->add_option("--tol", tol, "override every check tolerance");
  check->add_option("--samples", samples,
                    "override sampling: seeded Halton with N points");
  auto* seed_opt = check->add_option("--seed", seed, "Halton sequence seed");
  check->add_option("--format", format, "report format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* catalog = app.add_subcommand("catalog", "built-in chart catalog");
  auto* list = catalog->add_subcommand("list", "list catalog entries");
  std::string entry_name, export_path;
  auto* exp = catalog->add_subcommand("export", "export entry as manifest");
  exp->add_option("entry", entry_name, "catalog entry name")->required();
  exp->add_option("path", export_path, "output file")->required();
  catalog->require_subcommand(1);

  std::string curv_target, curv_at;
  auto* curv = app.add_subcommand(
      "curvature", "print Gamma, Ric, s for a chart at a point");
  curv->add_option("chart", curv_target,
                   "catalog entry or <manifest>:<chart>")
      ->required();
  curv->add_option("--at", curv_at, "comma-separated coordinates")->required();

  std::string self_format = "text";
  auto* self = app.add_subcommand("selftest", "run the golden catalog suite");
  self->add_option("--format", self_format, "report format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed())
      return cmd_check(manifest_path, tol, samples, seed,
                       seed_opt->count() > 0, format);
    if (list->parsed()) {
      for (const CatalogEntry& e : catalog_entries())
        std::cout << e.name << "\n";
      return kExitOk;
    }
    if (exp->parsed()) {
      const CatalogEntry* entry = find_catalog_entry(entry_name);
      if (!entry) {
        std::cerr << "error: unknown catalog entry '" << entry_name << "'\n";
        return kExitUsage;
      }
      std::ofstream out(export_path);
      if (!out) {
        std::cerr << "error: cannot write '" << export_path << "'\n";
        return kExitUsage;
      }
      out << manifest_to_json(manifest_from_entry(*entry)).dump(2) << "\n";
      return kExitOk;
    }
    if (curv->parsed()) return cmd_curvature(curv_target, curv_at);
    if (self->parsed()) return cmd_selftest(self_format);
  } catch (const EvalDomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
