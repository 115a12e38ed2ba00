#include "rgeom/soliton.hpp"

#include <cmath>

namespace rgeom {

namespace {

void require_gradient(const SolitonSpec& spec, const char* op) {
  if (spec.kind != SolitonKind::Gradient || !spec.potential)
    throw std::invalid_argument(std::string(op) +
                                ": soliton spec is not gradient");
}

// Delta F = -g^{ij} (Hess F)_ij
double laplacian_scalar(const PointGeometry& geo, const Tensor& hess) {
  const int n = geo.jet.g.dim();
  double v = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v -= geo.jet.ginv.at(i, j) * hess.at(i, j);
  return v;
}

}  // namespace

std::string to_string(SolitonClass c) {
  switch (c) {
    case SolitonClass::Steady: return "steady";
    case SolitonClass::Shrinking: return "shrinking";
    case SolitonClass::Expanding: return "expanding";
  }
  return "?";
}

SolitonClass classify(const SolitonSpec& spec) {
  if (spec.lambda < 0.0) return SolitonClass::Shrinking;
  if (spec.lambda > 0.0) return SolitonClass::Expanding;
  return SolitonClass::Steady;
}

ResidualSample soliton_residual(const PointGeometry& geo,
                                const SolitonSpec& spec,
                                const PointCoords& p) {
  const int n = geo.jet.g.dim();
  Tensor res(n, 2);
  if (spec.kind == SolitonKind::Gradient) {
    require_gradient(spec, "soliton_residual");
    Tensor hess = hessian(spec.potential->d1(p), spec.potential->d2(p),
                          geo.gamma);
    res = 2.0 * hess;
  } else {
    OneFormData th = oneform_data(geo.jet, *spec.xi, p);
    res = lie_metric(geo, th);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      res.at(i, j) += 2.0 * geo.ric.at(i, j) +
                      2.0 * spec.lambda * geo.jet.g.at(i, j);
  return make_residual(geo.jet, p, {{Slot::Lower, Slot::Lower}, res});
}

double trace_identity_residual(const PointGeometry& geo,
                               const SolitonSpec& spec, const PointCoords& p) {
  require_gradient(spec, "trace_identity_residual");
  const int n = geo.jet.g.dim();
  Tensor hess = hessian(spec.potential->d1(p), spec.potential->d2(p),
                        geo.gamma);
  double lap = laplacian_scalar(geo, hess);
  return std::abs(lap - geo.s - n * spec.lambda);
}

ResidualSample hamilton_identity_residual(const PointGeometry& geo,
                                          const SolitonSpec& spec,
                                          const PointCoords& p) {
  require_gradient(spec, "hamilton_identity_residual");
  if (geo.order < 3)
    throw std::logic_error("hamilton identity needs order-3 geometry");
  const int n = geo.jet.g.dim();
  Tensor dF = spec.potential->d1(p);
  Tensor rstar = ricci_star_oneform(geo, dF);
  Tensor res(n, 1);
  for (int k = 0; k < n; ++k) res.at(k) = geo.ds.at(k) - 2.0 * rstar.at(k);
  return make_residual(geo.jet, p, {{Slot::Lower}, res});
}

ResidualSample iht_of_soliton_residual(const PointGeometry& geo,
                                       const SolitonSpec& spec,
                                       const PointCoords& p) {
  return iht_residual(geo, spec.field(), p);
}

double ricci_quadratic_form(const PointGeometry& geo, const FieldDef& xi,
                            const PointCoords& p) {
  const int n = geo.jet.g.dim();
  VectorData v = vector_data(geo.jet, xi, p);
  double q = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q += geo.ric.at(i, j) * v.xi.at(i) * v.xi.at(j);
  return q;
}

double scalar_potential_diagnostic(const PointGeometry& geo,
                                   const SolitonSpec& spec,
                                   const PointCoords& p) {
  require_gradient(spec, "scalar_potential_diagnostic");
  if (geo.order < 3)
    throw std::logic_error("scalar_potential_diagnostic needs order 3");
  const int n = geo.jet.g.dim();
  Tensor dF = spec.potential->d1(p);
  Tensor d2F = spec.potential->d2(p);
  Tensor d3F = spec.potential->d3(p);
  Tensor hess = hessian(dF, d2F, geo.gamma);
  Tensor dginv = inverse_metric_partials(geo.jet);
  // d_k (Delta F) with Delta F = -g^{ij} hess_ij
  Tensor dlap(n, 1);
  for (int k = 0; k < n; ++k) {
    double v = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double dhess = d3F.at(k, i, j);
        for (int m = 0; m < n; ++m)
          dhess -= geo.dgamma.at(k, m, i, j) * dF.at(m) +
                   geo.gamma.at(m, i, j) * d2F.at(k, m);
        v -= dginv.at(k, i, j) * hess.at(i, j) +
             geo.jet.ginv.at(i, j) * dhess;
      }
    dlap.at(k) = v;
  }
  TensorValue res{{Slot::Lower}, Tensor(n, 1)};
  for (int k = 0; k < n; ++k)
    res.comp.at(k) = geo.ds.at(k) - 2.0 * dlap.at(k);
  return g_norm(geo.jet, res);
}

}  // namespace rgeom
