#include "rgeom/catalog.hpp"

namespace rgeom {

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::shared_ptr<const Chart> flat2(const std::string& name, double lo,
                                   double hi, int grid, bool with_j) {
  std::optional<Rows> J;
  if (with_j) J = Rows{{"0", "-1"}, {"1", "0"}};
  return std::make_shared<Chart>(
      name, std::vector<std::string>{"x", "y"},
      Rows{{"1", "0"}, {"", "1"}},
      DomainBox{{lo, lo}, {hi, hi}, {grid, grid}}, J);
}

CheckRequest check(std::string kind, std::string field, double tol,
                   double lambda = 0.0, bool expect_fail = false) {
  CheckRequest c;
  c.id = kind + (field.empty() ? "" : ":" + field);
  c.kind = std::move(kind);
  c.field = std::move(field);
  c.tolerance = tol;
  c.lambda = lambda;
  c.expect_fail = expect_fail;
  return c;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  // ------------------------------------------------------------------
  // flat-plane: zero curvature; rotation Killing, dilation conformal,
  // a holomorphic field, and the z -> z^2 harmonic self-map.
  {
    CatalogEntry e;
    e.name = "flat-plane";
    e.chart = flat2("flat-plane", -1.0, 1.0, 7, true);
    auto wide = flat2("flat-plane-wide", -3.0, 3.0, 3, false);
    e.aux_charts.push_back(wide);
    e.fields = {
        FieldDef("rotation", e.chart, FieldKind::Vector, {"-y", "x"}),
        FieldDef("dilation", e.chart, FieldKind::Vector, {"x", "y"}),
        FieldDef("zsq", e.chart, FieldKind::Vector,
                 {"x^2 - y^2", "2*x*y"}),
        FieldDef("square-map", e.chart, FieldKind::Map,
                 {"x^2 - y^2", "2*x*y"}, wide),
        FieldDef("testform", e.chart, FieldKind::OneForm,
                 {"x^2 - 0.3*y + 0.1*x*y", "y^3 + 0.5*x"}),
        FieldDef("testvec", e.chart, FieldKind::Vector,
                 {"0.3*x^2 - y + 0.2*x*y", "x + 0.4*y^2"}),
    };
    e.checks = {
        check("killing", "rotation", 1e-12),
        check("conformal", "dilation", 1e-12),
        check("holomorphic", "zsq", 1e-10),
        check("iht", "zsq", 1e-10),
        check("tension", "square-map", 1e-10),
        check("bianchi", "", 1e-10),
        check("yano_routes", "testform", 1e-8),
        check("lie_routes", "testvec", 1e-8),
    };
    e.provenance =
        "Euclidean plane; every expectation closed-form (flat algebra).";
    out.push_back(std::move(e));
  }

  // ------------------------------------------------------------------
  // round-sphere-S2: stereographic chart of the unit sphere, s = 2,
  // Ric = g. Rotation is Killing; (x, y) is the gradient of the first
  // spherical harmonic (r^2-1)/(r^2+1), a conformal field.
  {
    CatalogEntry e;
    e.name = "round-sphere-S2";
    e.chart = std::make_shared<Chart>(
        "round-sphere-S2", std::vector<std::string>{"x", "y"},
        Rows{{"4/(1+x^2+y^2)^2", "0"}, {"", "4/(1+x^2+y^2)^2"}},
        DomainBox{{-0.9, -0.9}, {0.9, 0.9}, {10, 10}});
    e.fields = {
        FieldDef("rotation", e.chart, FieldKind::Vector, {"-y", "x"}),
        FieldDef("grad-sh1", e.chart, FieldKind::Vector, {"x", "y"}),
        FieldDef("sh1", e.chart, FieldKind::Scalar,
                 {"(x^2+y^2-1)/(x^2+y^2+1)"}),
        FieldDef("const-potential", e.chart, FieldKind::Scalar, {"0"}),
        FieldDef("testform", e.chart, FieldKind::OneForm,
                 {"x^2 - 0.3*y + 0.1*x*y", "y^3 + 0.5*x"}),
        FieldDef("testvec", e.chart, FieldKind::Vector,
                 {"0.3*x^2 - y + 0.2*x*y", "x + 0.4*y^2"}),
    };
    e.checks = {
        check("killing", "rotation", 1e-8),
        check("iht", "rotation", 1e-8),
        check("conformal", "grad-sh1", 1e-8),
        check("iht", "grad-sh1", 1e-8),
        check("gradient_soliton", "const-potential", 1e-8, -1.0),
        check("trace_identity", "const-potential", 1e-8, -1.0),
        check("hamilton_identity", "const-potential", 1e-6),
        check("bianchi", "", 1e-6),
        check("yano_routes", "testform", 1e-8),
        check("lie_routes", "testvec", 1e-8),
    };
    e.classifications = {{"trivial-einstein", -1.0, SolitonClass::Shrinking}};
    e.provenance =
        "Unit round sphere in stereographic coordinates; s = 2 and Ric = g "
        "cross-checked by the finite-difference oracle; domain stays 0.1 "
        "inside the chart box to avoid large-r scale loss.";
    out.push_back(std::move(e));
  }

  // ------------------------------------------------------------------
  // hyperbolic-half-plane: s = -2, Ric = -g; Einstein with lambda = +1.
  {
    CatalogEntry e;
    e.name = "hyperbolic-half-plane";
    e.chart = std::make_shared<Chart>(
        "hyperbolic-half-plane", std::vector<std::string>{"x", "y"},
        Rows{{"1/y^2", "0"}, {"", "1/y^2"}},
        DomainBox{{-1.0, 1.0}, {1.0, 3.0}, {10, 10}});
    e.fields = {
        FieldDef("const-potential", e.chart, FieldKind::Scalar, {"0"}),
        FieldDef("testvec", e.chart, FieldKind::Vector,
                 {"0.3*x^2 - y + 0.2*x*y", "x + 0.4*y^2"}),
    };
    e.checks = {
        check("gradient_soliton", "const-potential", 1e-8, 1.0),
        check("trace_identity", "const-potential", 1e-8, 1.0),
        check("hamilton_identity", "const-potential", 1e-6),
        check("bianchi", "", 1e-6),
        check("lie_routes", "testvec", 1e-8),
    };
    e.classifications = {{"trivial-einstein", 1.0, SolitonClass::Expanding}};
    e.provenance =
        "Poincare half-plane; the y >= 1 margin keeps samples away from the "
        "metric singularity at y = 0.";
    out.push_back(std::move(e));
  }

  // ------------------------------------------------------------------
  // gaussian-shrinker: flat metric with F = r^2/4, lambda = -1/2.
  // All identities exact up to rounding.
  {
    CatalogEntry e;
    e.name = "gaussian-shrinker";
    e.chart = flat2("gaussian-plane", -1.0, 1.0, 10, false);
    e.fields = {
        FieldDef("potential", e.chart, FieldKind::Scalar, {"(x^2+y^2)/4"}),
    };
    e.checks = {
        check("gradient_soliton", "potential", 1e-12, -0.5),
        check("trace_identity", "potential", 1e-12, -0.5),
        check("hamilton_identity", "potential", 1e-12),
        check("iht", "potential", 1e-12),
    };
    e.classifications = {{"gaussian", -0.5, SolitonClass::Shrinking}};
    e.provenance = "Flat plane with quadratic potential; exact flat algebra.";
    out.push_back(std::move(e));
  }

  // ------------------------------------------------------------------
  // cigar: g = delta/(1+r^2), steady gradient soliton with potential
  // -log(1+r^2). The potential sign was resolved by evaluating the
  // soliton residual for both sign choices; only the negative one
  // vanishes (the positive sign leaves a residual of order 1).
  {
    CatalogEntry e;
    e.name = "cigar";
    e.chart = std::make_shared<Chart>(
        "cigar", std::vector<std::string>{"x", "y"},
        Rows{{"1/(1+x^2+y^2)", "0"}, {"", "1/(1+x^2+y^2)"}},
        DomainBox{{-1.0, -1.0}, {1.0, 1.0}, {10, 10}});
    e.fields = {
        FieldDef("potential", e.chart, FieldKind::Scalar,
                 {"-log(1+x^2+y^2)"}),
        FieldDef("testform", e.chart, FieldKind::OneForm,
                 {"x^2 - 0.3*y + 0.1*x*y", "y^3 + 0.5*x"}),
        FieldDef("testvec", e.chart, FieldKind::Vector,
                 {"0.3*x^2 - y + 0.2*x*y", "x + 0.4*y^2"}),
    };
    e.checks = {
        check("gradient_soliton", "potential", 1e-8, 0.0),
        check("trace_identity", "potential", 1e-8, 0.0),
        check("hamilton_identity", "potential", 1e-6),
        check("iht", "potential", 1e-8),
        check("bianchi", "", 1e-6),
        check("yano_routes", "testform", 1e-8),
        check("lie_routes", "testvec", 1e-8),
    };
    e.classifications = {{"cigar", 0.0, SolitonClass::Steady}};
    e.provenance =
        "Cigar metric; potential sign frozen by two-way residual "
        "evaluation at catalog construction (see tests).";
    out.push_back(std::move(e));
  }

  // ------------------------------------------------------------------
  // sphere-S3: three-dimensional stereographic round sphere, s = 6;
  // exercises the n-dependence of the trace identity.
  {
    CatalogEntry e;
    e.name = "sphere-S3";
    e.chart = std::make_shared<Chart>(
        "sphere-S3", std::vector<std::string>{"x", "y", "z"},
        Rows{{"4/(1+x^2+y^2+z^2)^2", "0", "0"},
             {"", "4/(1+x^2+y^2+z^2)^2", "0"},
             {"", "", "4/(1+x^2+y^2+z^2)^2"}},
        DomainBox{{-0.7, -0.7, -0.7}, {0.7, 0.7, 0.7}, {5, 5, 4}});
    e.fields = {
        FieldDef("const-potential", e.chart, FieldKind::Scalar, {"0"}),
    };
    e.checks = {
        check("gradient_soliton", "const-potential", 1e-8, -2.0),
        check("trace_identity", "const-potential", 1e-8, -2.0),
        check("hamilton_identity", "const-potential", 1e-6),
        check("bianchi", "", 1e-6),
    };
    e.classifications = {{"trivial-einstein", -2.0, SolitonClass::Shrinking}};
    e.provenance =
        "Unit round 3-sphere, stereographic chart; Ric = 2g, s = 6.";
    out.push_back(std::move(e));
  }

  // ------------------------------------------------------------------
  // flat-kahler-plane: standard J; one field passing both the
  // holomorphicity and harmonicity tests, one failing both.
  {
    CatalogEntry e;
    e.name = "flat-kahler-plane";
    e.chart = flat2("flat-kahler-plane", -1.0, 1.0, 7, true);
    e.fields = {
        FieldDef("holomorphic", e.chart, FieldKind::Vector,
                 {"x^2 - y^2", "2*x*y"}),
        FieldDef("nonholomorphic", e.chart, FieldKind::Vector, {"x^2", "0"}),
    };
    e.checks = {
        check("holomorphic", "holomorphic", 1e-10),
        check("iht", "holomorphic", 1e-10),
        check("holomorphic", "nonholomorphic", 1e-2, 0.0, true),
        check("iht", "nonholomorphic", 1e-2, 0.0, true),
    };
    e.provenance =
        "Flat Kahler plane; the failing field breaks the Cauchy-Riemann "
        "equations and has non-harmonic components.";
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace

const FieldDef* CatalogEntry::find_field(const std::string& fname) const {
  for (const FieldDef& f : fields)
    if (f.name() == fname) return &f;
  return nullptr;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace rgeom
