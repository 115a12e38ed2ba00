#include <cmath>

#include <doctest.h>

#include "rgeom/catalog.hpp"
#include "rgeom/harness.hpp"
#include "rgeom/operators.hpp"

using namespace rgeom;

namespace {

const CatalogEntry& entry_of(const char* name) {
  return *find_catalog_entry(name);
}

FieldDef oneform(const char* name, std::shared_ptr<const Chart> chart,
                 std::vector<std::string> comps) {
  return FieldDef(name, std::move(chart), FieldKind::OneForm,
                  std::move(comps));
}

std::vector<PointCoords> interior_samples(const Chart& c, int count,
                                          unsigned seed = 23) {
  SamplingConfig sc;
  sc.strategy = "halton";
  sc.count = count;
  sc.seed = seed;
  return sample_domain(c, sc);
}

}  // namespace

TEST_CASE("flat and sharp round-trip") {
  const Chart& c = *entry_of("round-sphere-S2").chart;
  for (const PointCoords& p : interior_samples(c, 10)) {
    MetricJet jet = metric_jet(c, p);
    Tensor xi(2, 1);
    xi.at(0) = 0.7 * p[0] - p[1];
    xi.at(1) = p[0] * p[1] + 0.2;
    Tensor back = sharp(jet, flat(jet, xi));
    back -= xi;
    CHECK(back.max_abs() < 1e-13);
  }
}

TEST_CASE("codifferential closed forms on the flat plane") {
  const CatalogEntry& e = entry_of("flat-plane");
  PointCoords p{0.4, -0.3};
  PointGeometry geo = point_geometry(*e.chart, p);

  FieldDef xdx = oneform("xdx", e.chart, {"x", "0"});
  CHECK(codifferential(geo, oneform_data(geo.jet, xdx, p)) ==
        doctest::Approx(-1.0));

  FieldDef rot = oneform("rot", e.chart, {"-y", "x"});
  CHECK(codifferential(geo, oneform_data(geo.jet, rot, p)) ==
        doctest::Approx(0.0));

  // d* dF = Delta F = -trace Hess F; F = x^2 gives -2.
  FieldDef F("F", e.chart, FieldKind::Scalar, {"x^2"});
  CHECK(codifferential(geo, oneform_data(geo.jet, F, p)) ==
        doctest::Approx(-2.0));
}

TEST_CASE("Hodge and Bochner Laplacians on the flat plane") {
  const CatalogEntry& e = entry_of("flat-plane");
  PointCoords p{0.4, -0.3};
  PointGeometry geo = point_geometry(*e.chart, p);

  // theta = x dy is harmonic (dtheta = dx^dy is constant, d*theta = 0).
  OneFormData xdy = oneform_data(geo.jet, oneform("xdy", e.chart, {"0", "x"}), p);
  CHECK(hodge_laplacian_1form(geo, xdy).max_abs() < 1e-14);

  // theta = x^2 dx: d*theta = -2x, dd*theta = -2 dx, dtheta = 0.
  OneFormData x2dx =
      oneform_data(geo.jet, oneform("x2dx", e.chart, {"x^2", "0"}), p);
  Tensor h = hodge_laplacian_1form(geo, x2dx);
  CHECK(h.at(0) == doctest::Approx(-2.0));
  CHECK(h.at(1) == doctest::Approx(0.0));

  // On a Ricci-flat chart Hodge and Bochner agree.
  Tensor b = bochner_laplacian_1form(geo, x2dx);
  b -= h;
  CHECK(b.max_abs() < 1e-13);
}

TEST_CASE("Ric* is +id on the sphere and -id on the half-plane") {
  struct Case {
    const char* entry;
    double sign;
  } cases[] = {{"round-sphere-S2", 1.0}, {"hyperbolic-half-plane", -1.0}};
  for (const Case& cs : cases) {
    const Chart& c = *entry_of(cs.entry).chart;
    for (const PointCoords& p : interior_samples(c, 10)) {
      PointGeometry geo = point_geometry(c, p);
      Tensor th(2, 1);
      th.at(0) = 0.3 + p[0];
      th.at(1) = p[1] - 0.1;
      Tensor r = ricci_star_oneform(geo, th);
      Tensor want = th;
      want *= cs.sign;
      r -= want;
      CHECK(r.max_abs() < 1e-12);

      Tensor xi(2, 1);
      xi.at(0) = p[1];
      xi.at(1) = 1.0;
      Tensor rv = ricci_star_vector(geo, xi);
      Tensor wantv = xi;
      wantv *= cs.sign;
      rv -= wantv;
      CHECK(rv.max_abs() < 1e-12);
    }
  }
}

TEST_CASE("delta_star matches coordinate partials on the flat plane") {
  const CatalogEntry& e = entry_of("flat-plane");
  PointCoords p{0.25, 0.5};
  PointGeometry geo = point_geometry(*e.chart, p);
  OneFormData th =
      oneform_data(geo.jet, oneform("th", e.chart, {"x*y", "y^2"}), p);
  Tensor ds = delta_star(geo, th);
  // (delta* theta)_ij = d_i theta_j + d_j theta_i on flat charts.
  CHECK(ds.at(0, 0) == doctest::Approx(2 * p[1]));
  CHECK(ds.at(0, 1) == doctest::Approx(p[0]));
  CHECK(ds.at(1, 0) == doctest::Approx(p[0]));
  CHECK(ds.at(1, 1) == doctest::Approx(4 * p[1]));
}

TEST_CASE("delta on symmetric 2-tensors") {
  const CatalogEntry& e = entry_of("flat-plane");
  PointCoords p{0.6, -0.2};
  PointGeometry geo = point_geometry(*e.chart, p);
  // h = diag(x^2, 0): (delta h)_j = -d_i h_ij = (-2x, 0).
  Tensor h(2, 2), dh(2, 3);
  h.at(0, 0) = p[0] * p[0];
  dh.at(0, 0, 0) = 2 * p[0];
  Tensor d = delta_sym2(geo, h, dh);
  CHECK(d.at(0) == doctest::Approx(-2 * p[0]));
  CHECK(d.at(1) == doctest::Approx(0.0));

  // delta g = 0 since nabla g = 0.
  const Chart& sphere = *entry_of("round-sphere-S2").chart;
  for (const PointCoords& q : interior_samples(sphere, 5)) {
    PointGeometry sgeo = point_geometry(sphere, q);
    CHECK(delta_sym2(sgeo, sgeo.jet.g, sgeo.jet.dg).max_abs() < 1e-13);
  }
}

TEST_CASE("the three Yano routes agree") {
  for (const char* name : {"round-sphere-S2", "cigar"}) {
    const CatalogEntry& e = entry_of(name);
    const FieldDef* f = e.find_field("testform");
    REQUIRE(f);
    for (const PointCoords& p : interior_samples(*e.chart, 25)) {
      PointGeometry geo = point_geometry(*e.chart, p);
      OneFormData th = oneform_data(geo.jet, *f, p);
      Tensor a = yano_box(geo, th, YanoRoute::Direct).value.comp;
      Tensor b = yano_box(geo, th, YanoRoute::Hodge).value.comp;
      Tensor c = yano_box(geo, th, YanoRoute::Bochner).value.comp;
      Tensor ab = a, ac = a;
      ab -= b;
      ac -= c;
      CHECK(g_norm(geo.jet, {{Slot::Lower}, ab}) < 1e-10);
      CHECK(g_norm(geo.jet, {{Slot::Lower}, ac}) < 1e-10);
    }
  }
}

TEST_CASE("Yano operator annihilates Killing forms") {
  const CatalogEntry& e = entry_of("round-sphere-S2");
  const FieldDef* rot = e.find_field("rotation");
  REQUIRE(rot);
  for (const PointCoords& p : interior_samples(*e.chart, 10)) {
    PointGeometry geo = point_geometry(*e.chart, p);
    OneFormData th = oneform_data(geo.jet, *rot, p);
    for (YanoRoute r : {YanoRoute::Direct, YanoRoute::Hodge, YanoRoute::Bochner})
      CHECK(g_norm(geo.jet, yano_box(geo, th, r).value) < 1e-12);
  }
}

TEST_CASE("Laplacian commutes with d on eigenfunctions") {
  // sh1 is a first spherical harmonic: Delta F = 2F, so
  // Hodge-Laplacian(dF) = d(Delta F) = 2 dF.
  const CatalogEntry& e = entry_of("round-sphere-S2");
  const FieldDef* sh1 = e.find_field("sh1");
  REQUIRE(sh1);
  for (const PointCoords& p : interior_samples(*e.chart, 25)) {
    PointGeometry geo = point_geometry(*e.chart, p);
    OneFormData dF = oneform_data(geo.jet, *sh1, p);
    CHECK(codifferential(geo, dF) ==
          doctest::Approx(2.0 * sh1->values(p).at()).epsilon(1e-10));
    Tensor lap = hodge_laplacian_1form(geo, dF);
    Tensor want = dF.theta;
    want *= 2.0;
    lap -= want;
    CHECK(g_norm(geo.jet, {{Slot::Lower}, lap}) < 1e-10);
  }
}

TEST_CASE("lie_metric of the dilation field is 2g") {
  const CatalogEntry& e = entry_of("flat-plane");
  const FieldDef* dil = e.find_field("dilation");
  REQUIRE(dil);
  PointCoords p{0.7, 0.1};
  PointGeometry geo = point_geometry(*e.chart, p);
  Tensor lg = lie_metric(geo, oneform_data(geo.jet, *dil, p));
  Tensor want = geo.jet.g;
  want *= 2.0;
  lg -= want;
  CHECK(lg.max_abs() < 1e-14);
}

TEST_CASE("the two Lie-connection routes agree everywhere in the catalog") {
  for (const CatalogEntry& e : catalog_entries()) {
    FieldDef test("t", e.chart, FieldKind::Vector,
                  std::vector<std::string>(
                      e.chart->dim(),
                      "0.2*x^2 - 0.5*y"));  // any smooth components
    for (const PointCoords& p : interior_samples(*e.chart, 10)) {
      PointGeometry geo = point_geometry(*e.chart, p);
      Tensor a = lie_connection(geo, test, p, LieRoute::Direct);
      Tensor b = lie_connection(geo, test, p, LieRoute::ViaMetric);
      a -= b;
      CHECK(g_norm(geo.jet, {{Slot::Upper, Slot::Lower, Slot::Lower}, a}) <
            1e-10);
    }
  }
}

TEST_CASE("Lie derivative of a flat connection along affine fields vanishes") {
  const CatalogEntry& e = entry_of("flat-plane");
  PointCoords p{0.3, 0.9};
  PointGeometry geo = point_geometry(*e.chart, p);
  for (const char* name : {"rotation", "dilation"}) {
    const FieldDef* f = e.find_field(name);
    REQUIRE(f);
    CHECK(lie_connection(geo, *f, p, LieRoute::Direct).max_abs() < 1e-14);
  }
}

TEST_CASE("tension field of harmonic maps vanishes") {
  const CatalogEntry& e = entry_of("flat-plane");
  const FieldDef* sq = e.find_field("square-map");
  REQUIRE(sq);
  for (const PointCoords& p : interior_samples(*e.chart, 10)) {
    PointGeometry geo = point_geometry(*e.chart, p);
    CHECK(tension_field(geo, *sq, p).max_abs() == 0.0);
  }
  // identity map between identical metrics: exactly zero
  FieldDef id("id", e.chart, FieldKind::Map, {"x", "y"}, e.chart);
  PointCoords p{0.5, -0.5};
  PointGeometry geo = point_geometry(*e.chart, p);
  CHECK(tension_field(geo, id, p).max_abs() == 0.0);
}

TEST_CASE("tension of the flat-to-sphere identity matches the "
          "connection-difference route") {
  // For the identity map, tau^k = g^{ij}(Gamma_target^k_ij -
  // Gamma_source^k_ij) with g the source (flat) metric.
  auto flat = std::make_shared<Chart>(
      "flat-src", std::vector<std::string>{"x", "y"},
      std::vector<std::vector<std::string>>{{"1", "0"}, {"", "1"}},
      DomainBox{{-0.8, -0.8}, {0.8, 0.8}, {7, 7}});
  const CatalogEntry& sph = entry_of("round-sphere-S2");
  FieldDef id("id", flat, FieldKind::Map, {"x", "y"}, sph.chart);
  SamplingConfig sc{"halton", 50, 5};
  for (const PointCoords& p : sample_domain(*flat, sc)) {
    PointGeometry geo = point_geometry(*flat, p);
    Tensor tau = tension_field(geo, id, p);
    Tensor gamma_t = christoffel(metric_jet(*sph.chart, p));
    Tensor want(2, 1);
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          want.at(k) += geo.jet.ginv.at(i, j) * gamma_t.at(k, i, j);
    want -= tau;
    CHECK(want.max_abs() < 1e-10);
  }
}

TEST_CASE("tension field rejects points mapped outside the target") {
  auto big = std::make_shared<Chart>(
      "big", std::vector<std::string>{"x", "y"},
      std::vector<std::vector<std::string>>{{"1", "0"}, {"", "1"}},
      DomainBox{{-1, -1}, {1, 1}, {3, 3}});
  const CatalogEntry& sph = entry_of("round-sphere-S2");  // box [-0.9, 0.9]
  FieldDef esc("esc", big, FieldKind::Map, {"2*x", "y"}, sph.chart);
  PointCoords p{0.8, 0.0};
  PointGeometry geo = point_geometry(*big, p);
  CHECK_THROWS_AS(tension_field(geo, esc, p), EvalDomainError);
}

TEST_CASE("route names parse") {
  CHECK(yano_route_from_string("hodge") == YanoRoute::Hodge);
  CHECK(lie_route_from_string("via_metric") == LieRoute::ViaMetric);
  CHECK_THROWS_AS(yano_route_from_string("nope"), std::invalid_argument);
  CHECK_THROWS_AS(lie_route_from_string("nope"), std::invalid_argument);
}
