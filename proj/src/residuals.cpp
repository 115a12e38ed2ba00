#include "rgeom/residuals.hpp"

namespace rgeom {

ResidualSample make_residual(const MetricJet& jet, const PointCoords& p,
                             TensorValue value) {
  ResidualSample s;
  s.point = p;
  s.gnorm = g_norm(jet, value);
  s.residual = std::move(value);
  return s;
}

ResidualSample killing_residual(const PointGeometry& geo, const FieldDef& xi,
                                const PointCoords& p) {
  OneFormData th = oneform_data(geo.jet, xi, p);
  return make_residual(geo.jet, p,
                       {{Slot::Lower, Slot::Lower}, lie_metric(geo, th)});
}

ResidualSample conformal_residual(const PointGeometry& geo, const FieldDef& xi,
                                  const PointCoords& p) {
  const int n = geo.jet.g.dim();
  OneFormData th = oneform_data(geo.jet, xi, p);
  Tensor res = lie_metric(geo, th);
  double dstar = codifferential(geo, th);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      res.at(i, j) += (2.0 / n) * dstar * geo.jet.g.at(i, j);
  return make_residual(geo.jet, p, {{Slot::Lower, Slot::Lower}, res});
}

ResidualSample holomorphic_residual(const PointGeometry& geo,
                                    const FieldDef& xi, const PointCoords& p) {
  const Chart& chart = *geo.jet.chart;
  if (!chart.has_complex_structure())
    throw ChartError("holomorphic residual needs a complex structure");
  const int n = chart.dim();
  VectorData v = vector_data(geo.jet, xi, p);
  Tensor J(n, 2), dJ(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const DerivTable& e = chart.complex_structure(i, j);
      J.at(i, j) = e.eval(p);
      for (int k = 0; k < n; ++k) dJ.at(k, i, j) = e.eval_deriv({k}, p);
    }
  // (L_xi J)^i_j = xi^k d_k J^i_j - J^k_j d_k xi^i + J^i_k d_j xi^k
  Tensor res(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double val = 0.0;
      for (int k = 0; k < n; ++k)
        val += v.xi.at(k) * dJ.at(k, i, j) - J.at(k, j) * v.dxi.at(k, i) +
               J.at(i, k) * v.dxi.at(j, k);
      res.at(i, j) = val;
    }
  return make_residual(geo.jet, p, {{Slot::Upper, Slot::Lower}, res});
}

ResidualSample iht_residual(const PointGeometry& geo, const FieldDef& xi,
                            const PointCoords& p, double* cross_check) {
  OneFormData th = oneform_data(geo.jet, xi, p);
  Tensor res = hodge_laplacian_1form(geo, th);
  res -= 2.0 * ricci_star_oneform(geo, th.theta);
  if (cross_check) {
    OperatorResult direct = yano_box(geo, th, YanoRoute::Direct);
    *cross_check = g_norm(geo.jet, direct.value);
  }
  return make_residual(geo.jet, p, {{Slot::Lower}, res});
}

}  // namespace rgeom
