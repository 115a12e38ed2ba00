#include <cmath>

#include <doctest.h>

#include "rgeom/catalog.hpp"
#include "rgeom/harness.hpp"
#include "rgeom/soliton.hpp"

using namespace rgeom;

namespace {

const CatalogEntry& entry_of(const char* name) {
  return *find_catalog_entry(name);
}

SolitonSpec gradient_spec(const CatalogEntry& e, const char* field,
                          double lambda) {
  SolitonSpec spec;
  spec.chart = e.chart;
  spec.kind = SolitonKind::Gradient;
  spec.potential = *e.find_field(field);
  spec.lambda = lambda;
  return spec;
}

std::vector<PointCoords> interior_samples(const Chart& c, int count) {
  SamplingConfig sc;
  sc.strategy = "halton";
  sc.count = count;
  sc.seed = 17;
  return sample_domain(c, sc);
}

}  // namespace

TEST_CASE("classification follows the sign of lambda") {
  SolitonSpec s;
  s.lambda = -0.5;
  CHECK(classify(s) == SolitonClass::Shrinking);
  s.lambda = 0.0;
  CHECK(classify(s) == SolitonClass::Steady);
  s.lambda = 1.0;
  CHECK(classify(s) == SolitonClass::Expanding);
  CHECK(to_string(SolitonClass::Shrinking) == "shrinking");
  CHECK(to_string(SolitonClass::Steady) == "steady");
  CHECK(to_string(SolitonClass::Expanding) == "expanding");
}

TEST_CASE("Gaussian shrinker: exact flat algebra") {
  const CatalogEntry& e = entry_of("gaussian-shrinker");
  SolitonSpec spec = gradient_spec(e, "potential", -0.5);
  CHECK(classify(spec) == SolitonClass::Shrinking);
  for (const PointCoords& p : interior_samples(*e.chart, 25)) {
    PointGeometry geo = point_geometry(*e.chart, p, 3);
    CHECK(soliton_residual(geo, spec, p).gnorm < 1e-14);
    CHECK(trace_identity_residual(geo, spec, p) < 1e-14);
    CHECK(hamilton_identity_residual(geo, spec, p).gnorm < 1e-14);
    CHECK(iht_of_soliton_residual(geo, spec, p).gnorm < 1e-14);
    CHECK(scalar_potential_diagnostic(geo, spec, p) < 1e-14);
  }
}

TEST_CASE("cigar: steady gradient soliton") {
  const CatalogEntry& e = entry_of("cigar");
  SolitonSpec spec = gradient_spec(e, "potential", 0.0);
  CHECK(classify(spec) == SolitonClass::Steady);
  for (const PointCoords& p : interior_samples(*e.chart, 25)) {
    PointGeometry geo = point_geometry(*e.chart, p, 3);
    CHECK(soliton_residual(geo, spec, p).gnorm < 1e-12);
    CHECK(trace_identity_residual(geo, spec, p) < 1e-12);
    CHECK(hamilton_identity_residual(geo, spec, p).gnorm < 1e-12);
    CHECK(iht_of_soliton_residual(geo, spec, p).gnorm < 1e-12);
  }
}

TEST_CASE("cigar potential sign oracle") {
  // The opposite sign choice F = +log(1+r^2) must NOT satisfy the soliton
  // equation; this is how the catalog sign was frozen.
  const CatalogEntry& e = entry_of("cigar");
  SolitonSpec wrong;
  wrong.chart = e.chart;
  wrong.kind = SolitonKind::Gradient;
  wrong.potential =
      FieldDef("wrong", e.chart, FieldKind::Scalar, {"log(1+x^2+y^2)"});
  wrong.lambda = 0.0;
  double max_res = 0.0;
  for (const PointCoords& p : interior_samples(*e.chart, 25)) {
    PointGeometry geo = point_geometry(*e.chart, p);
    max_res = std::max(max_res, soliton_residual(geo, wrong, p).gnorm);
  }
  CHECK(max_res > 1.0);
}

TEST_CASE("Einstein metrics are trivial gradient solitons") {
  struct Case {
    const char* entry;
    double lambda;
    SolitonClass cls;
  } cases[] = {
      {"round-sphere-S2", -1.0, SolitonClass::Shrinking},
      {"hyperbolic-half-plane", 1.0, SolitonClass::Expanding},
      {"sphere-S3", -2.0, SolitonClass::Shrinking},
  };
  for (const Case& cs : cases) {
    const CatalogEntry& e = entry_of(cs.entry);
    SolitonSpec spec = gradient_spec(e, "const-potential", cs.lambda);
    CHECK(classify(spec) == cs.cls);
    for (const PointCoords& p : interior_samples(*e.chart, 10)) {
      PointGeometry geo = point_geometry(*e.chart, p, 3);
      CHECK(soliton_residual(geo, spec, p).gnorm < 1e-12);
      CHECK(trace_identity_residual(geo, spec, p) < 1e-12);
      CHECK(hamilton_identity_residual(geo, spec, p).gnorm < 1e-12);
    }
  }
}

TEST_CASE("trace identity detects a wrong lambda") {
  const CatalogEntry& e = entry_of("round-sphere-S2");
  SolitonSpec spec = gradient_spec(e, "const-potential", -1.0 + 0.25);
  PointCoords p{0.2, -0.1};
  PointGeometry geo = point_geometry(*e.chart, p);
  // residual = n * |delta lambda| = 2 * 0.25
  CHECK(trace_identity_residual(geo, spec, p) == doctest::Approx(0.5));
  CHECK(soliton_residual(geo, spec, p).gnorm > 0.1);
}

TEST_CASE("generic soliton form matches the gradient form") {
  // On the Gaussian shrinker, xi = grad F = (x/2, y/2); the generic
  // residual through L_xi g must equal the gradient residual through Hess.
  const CatalogEntry& e = entry_of("gaussian-shrinker");
  SolitonSpec gen;
  gen.chart = e.chart;
  gen.kind = SolitonKind::Generic;
  gen.xi = FieldDef("xi", e.chart, FieldKind::Vector, {"x/2", "y/2"});
  gen.lambda = -0.5;
  for (const PointCoords& p : interior_samples(*e.chart, 10)) {
    PointGeometry geo = point_geometry(*e.chart, p);
    CHECK(soliton_residual(geo, gen, p).gnorm < 1e-14);
  }
}

TEST_CASE("Ricci quadratic form has the curvature's sign") {
  const CatalogEntry& sph = entry_of("round-sphere-S2");
  const CatalogEntry& hyp = entry_of("hyperbolic-half-plane");
  const FieldDef* rot = sph.find_field("rotation");
  const FieldDef* tv = hyp.find_field("testvec");
  REQUIRE(rot);
  REQUIRE(tv);
  for (const PointCoords& p : interior_samples(*sph.chart, 10)) {
    if (std::abs(p[0]) + std::abs(p[1]) < 1e-3) continue;  // rot vanishes at 0
    PointGeometry geo = point_geometry(*sph.chart, p);
    CHECK(ricci_quadratic_form(geo, *rot, p) > 0.0);
  }
  for (const PointCoords& p : interior_samples(*hyp.chart, 10)) {
    PointGeometry geo = point_geometry(*hyp.chart, p);
    CHECK(ricci_quadratic_form(geo, *tv, p) < 0.0);
  }
}

TEST_CASE("the scalar-potential diagnostic is reported, not asserted") {
  // On the cigar it is genuinely nonzero (ds != 0 there), which is why the
  // harness only records it.
  const CatalogEntry& e = entry_of("cigar");
  SolitonSpec spec = gradient_spec(e, "potential", 0.0);
  double max_diag = 0.0;
  for (const PointCoords& p : interior_samples(*e.chart, 10)) {
    PointGeometry geo = point_geometry(*e.chart, p, 3);
    max_diag = std::max(max_diag, scalar_potential_diagnostic(geo, spec, p));
  }
  CHECK(max_diag > 0.1);
}
