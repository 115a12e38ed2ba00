#include "rgeom/harness.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rgeom {

namespace {

using nlohmann::json;

double halton(unsigned index, unsigned base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

// One residual evaluation at one point, plus optional diagnostics.
struct PointResult {
  double gnorm = 0.0;
  std::map<std::string, double> extra;
};

int geometry_order(const std::string& kind) {
  if (kind == "bianchi" || kind == "hamilton_identity") return 3;
  return 2;
}

SolitonSpec make_spec(const Manifest& m, const CheckRequest& c,
                      const FieldDef& f) {
  SolitonSpec spec;
  spec.chart = m.find_chart(f.chart().name());
  spec.lambda = c.lambda;
  if (f.kind() == FieldKind::Scalar) {
    spec.kind = SolitonKind::Gradient;
    spec.potential = f;
  } else {
    spec.kind = SolitonKind::Generic;
    spec.xi = f;
  }
  return spec;
}

PointResult eval_check(const Manifest& m, const CheckRequest& c,
                       const FieldDef* f, const PointGeometry& geo,
                       const PointCoords& p) {
  PointResult r;
  if (c.kind == "killing") {
    r.gnorm = killing_residual(geo, *f, p).gnorm;
  } else if (c.kind == "conformal") {
    r.gnorm = conformal_residual(geo, *f, p).gnorm;
  } else if (c.kind == "holomorphic") {
    r.gnorm = holomorphic_residual(geo, *f, p).gnorm;
  } else if (c.kind == "iht") {
    double direct_gnorm = 0.0;
    r.gnorm = iht_residual(geo, *f, p, &direct_gnorm).gnorm;
    r.extra["yano_direct_gap"] = std::abs(r.gnorm - direct_gnorm);
  } else if (c.kind == "soliton" || c.kind == "gradient_soliton") {
    SolitonSpec spec = make_spec(m, c, *f);
    if (c.kind == "gradient_soliton" && spec.kind != SolitonKind::Gradient)
      throw std::invalid_argument("gradient_soliton needs a scalar potential");
    r.gnorm = soliton_residual(geo, spec, p).gnorm;
  } else if (c.kind == "trace_identity") {
    SolitonSpec spec = make_spec(m, c, *f);
    r.gnorm = trace_identity_residual(geo, spec, p);
  } else if (c.kind == "hamilton_identity") {
    SolitonSpec spec = make_spec(m, c, *f);
    r.gnorm = hamilton_identity_residual(geo, spec, p).gnorm;
    r.extra["scalar_potential_diagnostic"] =
        scalar_potential_diagnostic(geo, spec, p);
  } else if (c.kind == "bianchi") {
    r.gnorm = bianchi_residual(geo);
  } else if (c.kind == "yano_routes") {
    OneFormData th = oneform_data(geo.jet, *f, p);
    Tensor a = yano_box(geo, th, YanoRoute::Direct).value.comp;
    Tensor b = yano_box(geo, th, YanoRoute::Hodge).value.comp;
    Tensor d = yano_box(geo, th, YanoRoute::Bochner).value.comp;
    double ab = g_norm(geo.jet, {{Slot::Lower}, a - b});
    double ad = g_norm(geo.jet, {{Slot::Lower}, a - d});
    double bd = g_norm(geo.jet, {{Slot::Lower}, b - d});
    r.gnorm = std::max({ab, ad, bd});
  } else if (c.kind == "lie_routes") {
    Tensor a = lie_connection(geo, *f, p, LieRoute::Direct);
    Tensor b = lie_connection(geo, *f, p, LieRoute::ViaMetric);
    r.gnorm = g_norm(geo.jet, {{Slot::Upper, Slot::Lower, Slot::Lower}, a - b});
  } else if (c.kind == "tension") {
    Tensor tau = tension_field(geo, *f, p);
    const Chart& target = f->target();
    PointCoords fp(target.dim());
    for (int a = 0; a < target.dim(); ++a) fp[a] = f->component(a).eval(p);
    MetricJet tjet = metric_jet(target, fp);
    r.gnorm = g_norm(tjet, {{Slot::Upper}, tau});
  } else {
    throw std::invalid_argument("unknown check kind '" + c.kind + "'");
  }
  return r;
}

}  // namespace

double default_tolerance(const std::string& kind) {
  if (kind == "bianchi" || kind == "hamilton_identity") return 1e-6;
  return 1e-8;
}

std::vector<PointCoords> sample_domain(
    const Chart& chart, const std::optional<SamplingConfig>& sampling) {
  const DomainBox& dom = chart.domain();
  const int n = chart.dim();
  std::vector<PointCoords> points;
  std::string strategy = sampling ? sampling->strategy : dom.strategy;
  if (strategy == "halton") {
    static const unsigned bases[] = {2, 3, 5, 7};
    if (n > 4) throw ChartError("halton sampling supports dimension <= 4");
    int count = sampling ? sampling->count : 100;
    unsigned seed = sampling ? sampling->seed : 42;
    if (count <= 0) throw ChartError("sample count must be positive");
    for (int i = 0; i < count; ++i) {
      PointCoords p(n);
      for (int a = 0; a < n; ++a) {
        double u = halton(seed + 1 + static_cast<unsigned>(i), bases[a]);
        p[a] = dom.lo[a] + u * (dom.hi[a] - dom.lo[a]);
      }
      points.push_back(std::move(p));
    }
    return points;
  }
  // grid strategy: cell centers of the per-axis subdivision
  if (static_cast<int>(dom.grid.size()) != n)
    throw ChartError("domain grid size != dimension");
  std::size_t total = 1;
  for (int c : dom.grid) {
    if (c <= 0) throw ChartError("grid sample count must be positive");
    total *= static_cast<std::size_t>(c);
  }
  for (std::size_t f = 0; f < total; ++f) {
    PointCoords p(n);
    std::size_t rem = f;
    for (int a = n - 1; a >= 0; --a) {
      int idx = static_cast<int>(rem % dom.grid[a]);
      rem /= dom.grid[a];
      p[a] = dom.lo[a] +
             (idx + 0.5) * (dom.hi[a] - dom.lo[a]) / dom.grid[a];
    }
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<CheckReport> run_manifest(const Manifest& m) {
  std::vector<CheckReport> reports;
  for (const CheckRequest& c : m.checks) {
    CheckReport rep;
    rep.id = c.id;
    rep.kind = c.kind;
    rep.field = c.field;
    rep.expect_fail = c.expect_fail;
    rep.tolerance = c.tolerance > 0.0 ? c.tolerance : default_tolerance(c.kind);
    try {
      const FieldDef* f = nullptr;
      std::shared_ptr<const Chart> chart;
      if (c.kind == "bianchi") {
        chart = m.find_chart(c.chart);
        if (!chart)
          throw ManifestError("check references undefined chart '" + c.chart +
                              "'");
      } else {
        f = m.find_field(c.field);
        if (!f)
          throw ManifestError("check references undefined field '" + c.field +
                              "'");
        chart = m.find_chart(f->chart().name());
      }
      rep.chart = chart->name();
      if (c.kind == "soliton" || c.kind == "gradient_soliton")
        rep.soliton_class = to_string(classify(make_spec(m, c, *f)));

      const int order = geometry_order(c.kind);
      double sumsq = 0.0;
      for (const PointCoords& p : sample_domain(*chart, m.sampling)) {
        PointGeometry geo = point_geometry(*chart, p, order);
        PointResult pr = eval_check(m, c, f, geo, p);
        ++rep.points;
        sumsq += pr.gnorm * pr.gnorm;
        if (pr.gnorm >= rep.max_gnorm) {
          if (pr.gnorm > rep.max_gnorm || rep.worst_point.empty()) {
            rep.max_gnorm = pr.gnorm;
            rep.worst_point = p;
          }
        }
        for (const auto& [k, v] : pr.extra) {
          auto it = rep.extra.find(k);
          if (it == rep.extra.end() || v > it->second) rep.extra[k] = v;
        }
      }
      if (rep.points == 0) throw ChartError("no sample points");
      rep.rms = std::sqrt(sumsq / rep.points);
      rep.pass = rep.max_gnorm <= rep.tolerance;
    } catch (const std::exception& e) {
      rep.error = e.what();
      rep.pass = false;
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

json reports_to_json(const std::vector<CheckReport>& reports) {
  json checks = json::array();
  for (const CheckReport& r : reports) {
    json j;
    j["id"] = r.id;
    j["kind"] = r.kind;
    if (!r.field.empty()) j["field"] = r.field;
    j["chart"] = r.chart;
    if (!r.error.empty()) {
      j["error"] = r.error;
      j["verdict"] = "error";
    } else {
      j["points"] = r.points;
      j["max"] = r.max_gnorm;
      j["rms"] = r.rms;
      j["worst_point"] = r.worst_point;
      j["tolerance"] = r.tolerance;
      j["verdict"] = r.pass ? "pass" : "fail";
      if (r.expect_fail) j["expected"] = "fail";
      if (!r.soliton_class.empty()) j["class"] = r.soliton_class;
      if (!r.extra.empty()) j["extra"] = r.extra;
    }
    checks.push_back(std::move(j));
  }
  json doc;
  doc["version"] = 1;
  doc["checks"] = checks;
  doc["all_ok"] = all_ok(reports);
  return doc;
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
  // renders the same numbers the JSON report carries
  auto num = [](double v) { return json(v).dump(); };
  std::ostringstream os;
  for (const CheckReport& r : reports) {
    if (!r.error.empty()) {
      os << "ERROR " << r.id << " [" << r.chart << "] " << r.error << "\n";
      continue;
    }
    os << (r.ok() ? "ok   " : "FAIL ") << r.id << " [" << r.chart << "]"
       << " verdict=" << (r.pass ? "pass" : "fail");
    if (r.expect_fail) os << " (expected fail)";
    os << " max=" << num(r.max_gnorm) << " rms=" << num(r.rms)
       << " tol=" << num(r.tolerance) << " points=" << r.points << " worst=(";
    for (std::size_t i = 0; i < r.worst_point.size(); ++i)
      os << (i ? "," : "") << num(r.worst_point[i]);
    os << ")";
    if (!r.soliton_class.empty()) os << " class=" << r.soliton_class;
    for (const auto& [k, v] : r.extra) os << " " << k << "=" << num(v);
    os << "\n";
  }
  return os.str();
}

bool all_ok(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (!r.ok()) return false;
  return true;
}

bool any_error(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (!r.error.empty()) return true;
  return false;
}

}  // namespace rgeom
