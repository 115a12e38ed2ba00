#pragma once

#include "rgeom/chart.hpp"
#include "rgeom/tensor.hpp"

namespace rgeom {

// Numeric values of g, dg, d2g, d3g and the inverse metric at one point.
// Index layout puts derivative axes first: dg(k,i,j) = d_k g_ij,
// d2g(l,k,i,j) = d_l d_k g_ij, d3g(m,l,k,i,j) = d_m d_l d_k g_ij.
struct MetricJet {
  const Chart* chart = nullptr;
  PointCoords point;
  Tensor g, dg, d2g, d3g, ginv;
};

// Evaluates the full third-order metric jet; checks positive definiteness.
MetricJet metric_jet(const Chart& chart, const PointCoords& p);

// (k,p,q) = d_k g^{pq} = -g^{pa} d_k g_ab g^{bq}.
Tensor inverse_metric_partials(const MetricJet& jet);

// Gamma(k,i,j) = Gamma^k_ij of the Levi-Civita connection.
Tensor christoffel(const MetricJet& jet);
// (l,k,i,j) = d_l Gamma^k_ij
Tensor christoffel_partials(const MetricJet& jet);
// (m,l,k,i,j) = d_m d_l Gamma^k_ij (consumes d3g)
Tensor christoffel_second_partials(const MetricJet& jet);

// R(k,l,i,j) = R^k_{lij} with the convention
//   R(e_i, e_j) e_l = (d_i Gamma^k_jl - d_j Gamma^k_il
//                      + Gamma^k_im Gamma^m_jl - Gamma^k_jm Gamma^m_il) e_k
// so the unit round 2-sphere has Ric = +g (see docs/conventions.md).
Tensor riemann(const MetricJet& jet);

// Ric_{lj} = R^i_{lij}.
Tensor ricci(const MetricJet& jet);
double scalar_curvature(const MetricJet& jet);

// Everything the operator layer needs at one point. `order` controls how
// deep the derivative chain goes: 2 gives Gamma, dGamma, curvature;
// 3 additionally gives d2Gamma, dRic and ds.
struct PointGeometry {
  MetricJet jet;
  Tensor gamma, dgamma;
  Tensor riem, ric;
  double s = 0.0;
  int order = 2;
  Tensor d2gamma;  // order 3 only
  Tensor dric;     // (m,l,j) = d_m Ric_{lj}, order 3 only
  Tensor ds;       // (m) = d_m s, order 3 only
};

PointGeometry point_geometry(const Chart& chart, const PointCoords& p,
                             int order = 2);

// Levi-Civita covariant derivative of a numeric tensor given its coordinate
// partials dT(a, idx...) = d_a T(idx...). Result has the derivative slot
// (Lower) prepended.
TensorValue covariant_derivative(const TensorValue& T, const Tensor& dT,
                                 const Tensor& gamma);

// Hessian of a scalar: hess_ij = d2F_ij - Gamma^k_ij dF_k (symmetric).
Tensor hessian(const Tensor& dF, const Tensor& d2F, const Tensor& gamma);

// nabla_i theta_j = dtheta(i,j) - Gamma^k_ij theta_k.
Tensor nabla_oneform(const Tensor& theta, const Tensor& dtheta,
                     const Tensor& gamma);
// nabla_i nabla_j theta_k, assembled from symbolic partials of theta and
// Gamma, dGamma. Needed by every second-order operator.
Tensor nabla2_oneform(const Tensor& theta, const Tensor& dtheta,
                      const Tensor& d2theta, const Tensor& gamma,
                      const Tensor& dgamma);
// nabla_i xi^k = dxi(i,k) + Gamma^k_il xi^l.
Tensor nabla_vector(const Tensor& xi, const Tensor& dxi, const Tensor& gamma);
// nabla_i nabla_j xi^k.
Tensor nabla2_vector(const Tensor& xi, const Tensor& dxi, const Tensor& d2xi,
                     const Tensor& gamma, const Tensor& dgamma);

// Pointwise tensor norm: full contraction with g (upper slots) and g^{-1}
// (lower slots), square-rooted. Coordinate invariant.
double g_norm(const MetricJet& jet, const TensorValue& T);

// Pointwise contracted-Bianchi (Schur) residual:
// g-norm of 2 g^{jk} nabla_k Ric_{jl} - d_l s. Requires order-3 geometry.
double bianchi_residual(const PointGeometry& geo);

}  // namespace rgeom
