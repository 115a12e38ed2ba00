#include <cmath>

#include <doctest.h>

#include "rgeom/catalog.hpp"
#include "rgeom/geometry.hpp"
#include "rgeom/harness.hpp"

using namespace rgeom;

namespace {

const Chart& chart_of(const char* entry) {
  return *find_catalog_entry(entry)->chart;
}

std::vector<PointCoords> interior_samples(const Chart& c, int count,
                                          unsigned seed = 11) {
  SamplingConfig sc;
  sc.strategy = "halton";
  sc.count = count;
  sc.seed = seed;
  return sample_domain(c, sc);
}

}  // namespace

TEST_CASE("flat plane is flat") {
  const Chart& c = chart_of("flat-plane");
  PointGeometry geo = point_geometry(c, {0.3, -0.4});
  CHECK(geo.gamma.max_abs() == 0.0);
  CHECK(geo.riem.max_abs() == 0.0);
  CHECK(geo.ric.max_abs() == 0.0);
  CHECK(geo.s == 0.0);
}

TEST_CASE("hyperbolic Christoffel symbols in closed form") {
  // g = (dx^2 + dy^2)/y^2:
  //   Gamma^x_xy = -1/y, Gamma^y_xx = 1/y, Gamma^y_yy = -1/y, rest 0.
  const Chart& c = chart_of("hyperbolic-half-plane");
  for (double y : {1.25, 2.0, 2.75}) {
    PointGeometry geo = point_geometry(c, {0.4, y});
    CHECK(geo.gamma.at(0, 0, 1) == doctest::Approx(-1.0 / y));
    CHECK(geo.gamma.at(0, 1, 0) == doctest::Approx(-1.0 / y));
    CHECK(geo.gamma.at(1, 0, 0) == doctest::Approx(1.0 / y));
    CHECK(geo.gamma.at(1, 1, 1) == doctest::Approx(-1.0 / y));
    CHECK(std::abs(geo.gamma.at(0, 0, 0)) < 1e-14);
    CHECK(std::abs(geo.gamma.at(1, 0, 1)) < 1e-14);
  }
}

TEST_CASE("Christoffel partials agree with finite differences") {
  const Chart& c = chart_of("round-sphere-S2");
  const double h = 1e-4;
  for (const PointCoords& p : interior_samples(c, 10)) {
    Tensor dgamma = christoffel_partials(metric_jet(c, p));
    for (int a = 0; a < 2; ++a) {
      PointCoords pp = p, pm = p;
      pp[a] += h;
      pm[a] -= h;
      Tensor gp = christoffel(metric_jet(c, pp));
      Tensor gm = christoffel(metric_jet(c, pm));
      for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            double fd = (gp.at(k, i, j) - gm.at(k, i, j)) / (2 * h);
            CHECK(std::abs(dgamma.at(a, k, i, j) - fd) < 1e-5);
          }
    }
  }
}

TEST_CASE("constant-curvature ground truth") {
  struct Case {
    const char* entry;
    double s;
    double einstein;  // Ric = einstein * g
  } cases[] = {
      {"round-sphere-S2", 2.0, 1.0},
      {"hyperbolic-half-plane", -2.0, -1.0},
      {"sphere-S3", 6.0, 2.0},
  };
  for (const Case& cs : cases) {
    const Chart& c = chart_of(cs.entry);
    for (const PointCoords& p : interior_samples(c, 25)) {
      PointGeometry geo = point_geometry(c, p);
      CHECK(geo.s == doctest::Approx(cs.s).epsilon(1e-10));
      Tensor diff = geo.ric;
      Tensor scaled = geo.jet.g;
      scaled *= cs.einstein;
      diff -= scaled;
      CHECK(g_norm(geo.jet, {{Slot::Lower, Slot::Lower}, diff}) < 1e-10);
    }
  }
}

TEST_CASE("Riemann symmetries and first Bianchi identity") {
  for (const char* entry : {"round-sphere-S2", "cigar", "sphere-S3"}) {
    const Chart& c = chart_of(entry);
    const int n = c.dim();
    for (const PointCoords& p : interior_samples(c, 5)) {
      Tensor R = riemann(metric_jet(c, p));
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              CHECK(std::abs(R.at(k, l, i, j) + R.at(k, l, j, i)) < 1e-12);
              // cyclic sum over the lower three indices
              CHECK(std::abs(R.at(k, l, i, j) + R.at(k, i, j, l) +
                             R.at(k, j, l, i)) < 1e-10);
            }
    }
  }
}

TEST_CASE("metric is covariantly constant") {
  for (const char* entry : {"round-sphere-S2", "cigar", "hyperbolic-half-plane"}) {
    const Chart& c = chart_of(entry);
    for (const PointCoords& p : interior_samples(c, 10)) {
      PointGeometry geo = point_geometry(c, p);
      TensorValue g{{Slot::Lower, Slot::Lower}, geo.jet.g};
      TensorValue nabla_g =
          covariant_derivative(g, geo.jet.dg, geo.gamma);
      CHECK(g_norm(geo.jet, nabla_g) < 1e-10);
    }
  }
}

TEST_CASE("inverse metric partials") {
  const Chart& c = chart_of("cigar");
  const double h = 1e-5;
  PointCoords p{0.3, -0.6};
  Tensor dginv = inverse_metric_partials(metric_jet(c, p));
  for (int a = 0; a < 2; ++a) {
    PointCoords pp = p, pm = p;
    pp[a] += h;
    pm[a] -= h;
    Tensor gp = metric_jet(c, pp).ginv;
    Tensor gm = metric_jet(c, pm).ginv;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(dginv.at(a, i, j) ==
              doctest::Approx((gp.at(i, j) - gm.at(i, j)) / (2 * h))
                  .epsilon(1e-6));
  }
}

TEST_CASE("contracted Bianchi residual on every catalog chart") {
  for (const CatalogEntry& entry : catalog_entries()) {
    const Chart& c = *entry.chart;
    for (const PointCoords& p : interior_samples(c, 25)) {
      PointGeometry geo = point_geometry(c, p, 3);
      CHECK(bianchi_residual(geo) < 1e-6);
    }
  }
}

TEST_CASE("Hessian and g-norm on the flat plane") {
  const Chart& c = chart_of("flat-plane");
  MetricJet jet = metric_jet(c, {0.5, 0.5});
  // F = x^2 + y^2: Hess = 2 id, Delta F = -trace = -4.
  DerivTable F(parse_expr("x^2 + y^2", c.coords()), 2, 2);
  PointCoords p{0.5, 0.5};
  Tensor dF(2, 1), d2F(2, 2);
  for (int i = 0; i < 2; ++i) {
    dF.at(i) = F.eval_deriv({i}, p);
    for (int j = 0; j < 2; ++j) d2F.at(i, j) = F.eval_deriv({i, j}, p);
  }
  Tensor hess = hessian(dF, d2F, christoffel(jet));
  CHECK(hess.at(0, 0) == doctest::Approx(2.0));
  CHECK(hess.at(1, 1) == doctest::Approx(2.0));
  CHECK(hess.at(0, 1) == doctest::Approx(0.0));

  Tensor v(2, 1);
  v.at(0) = 3.0;
  v.at(1) = 4.0;
  CHECK(g_norm(jet, {{Slot::Upper}, v}) == doctest::Approx(5.0));
}

TEST_CASE("g-norm is coordinate-weighted, not Euclidean") {
  // |dx|_g = sqrt(g^xx) = y on the hyperbolic half-plane.
  const Chart& c = chart_of("hyperbolic-half-plane");
  MetricJet jet = metric_jet(c, {0.0, 2.0});
  Tensor dx(2, 1);
  dx.at(0) = 1.0;
  CHECK(g_norm(jet, {{Slot::Lower}, dx}) == doctest::Approx(2.0));
}

TEST_CASE("positive definiteness is enforced") {
  Chart bad("bad", {"x", "y"}, {{"x", "0"}, {"", "1"}},
            DomainBox{{-1, -1}, {1, 1}, {3, 3}});
  CHECK_THROWS_AS(metric_jet(bad, PointCoords{-0.5, 0.0}), ChartError);
  CHECK_NOTHROW(metric_jet(bad, PointCoords{0.5, 0.0}));
}
