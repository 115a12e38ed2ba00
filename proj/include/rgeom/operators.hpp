#pragma once

#include "rgeom/field.hpp"
#include "rgeom/geometry.hpp"

namespace rgeom {

// 1-form components and their coordinate partials at one point, whatever
// the defining field was (a 1-form directly, a vector lowered with the
// metric, or a scalar potential via theta = dF).
struct OneFormData {
  Tensor theta;    // (j)
  Tensor dtheta;   // (a,j) = d_a theta_j
  Tensor d2theta;  // (a,b,j)
};

// Vector components and partials at one point.
struct VectorData {
  Tensor xi;    // (k)
  Tensor dxi;   // (a,k)
  Tensor d2xi;  // (a,b,k)
};

// Builds per-point data from a symbolic field. Vector fields are lowered
// through the metric jet (theta = g xi, with product-rule partials), so all
// derivatives stay symbolic-exact.
OneFormData oneform_data(const MetricJet& jet, const FieldDef& f,
                         const PointCoords& p);
VectorData vector_data(const MetricJet& jet, const FieldDef& f,
                       const PointCoords& p);

// Musical isomorphisms (pure index algebra at a point).
Tensor flat(const MetricJet& jet, const Tensor& xi);
Tensor sharp(const MetricJet& jet, const Tensor& theta);

// d* theta = -g^{ij} nabla_i theta_j.
double codifferential(const PointGeometry& geo, const OneFormData& th);

// Hodge Laplacian (dd* + d*d) on 1-forms, assembled from coordinate
// partials of theta and the exterior derivative (no nabla-nabla arrays);
// this keeps the route independent of the Bochner assembly.
Tensor hodge_laplacian_1form(const PointGeometry& geo, const OneFormData& th);

// Bochner (rough) Laplacian: -g^{ij} nabla_i nabla_j theta.
Tensor bochner_laplacian_1form(const PointGeometry& geo, const OneFormData& th);

// (Ric* xi)^i = g^{ij} Ric_jk xi^k and (Ric* theta)_i = Ric_i^j theta_j.
Tensor ricci_star_vector(const PointGeometry& geo, const Tensor& xi);
Tensor ricci_star_oneform(const PointGeometry& geo, const Tensor& theta);

// (delta* theta)_{ij} = nabla_i theta_j + nabla_j theta_i (no 1/2), equal
// to L_{theta#} g. On scalars delta* F = dF.
Tensor delta_star(const PointGeometry& geo, const OneFormData& th);

// (delta h)_j = -g^{ik} nabla_i h_{kj} for a sym2 field given by numeric
// components h(i,j) and coordinate partials dh(a,i,j).
Tensor delta_sym2(const PointGeometry& geo, const Tensor& h, const Tensor& dh);

enum class YanoRoute { Direct, Hodge, Bochner };
YanoRoute yano_route_from_string(const std::string& s);

struct OperatorResult {
  TensorValue value;
  std::string route;
};

// The Yano operator on 1-forms by three algebraically independent routes:
//   Direct:  delta(delta* theta) - delta*(delta theta)
//   Hodge:   Delta theta - 2 Ric* theta
//   Bochner: nabla*nabla theta - Ric* theta
OperatorResult yano_box(const PointGeometry& geo, const OneFormData& th,
                        YanoRoute route);

// (L_xi g)_{ij} = nabla_i theta_j + nabla_j theta_i with theta = flat(xi).
Tensor lie_metric(const PointGeometry& geo, const OneFormData& th);

enum class LieRoute { Direct, ViaMetric };
LieRoute lie_route_from_string(const std::string& s);

// Lie derivative of the Christoffel symbols, (k,i,j):
//   Direct:    nabla_i nabla_j xi^k + R^k_{jli} xi^l (slot contraction
//              frozen against the ViaMetric route; see docs/conventions.md)
//   ViaMetric: 1/2 g^{kl}(nabla_i (Lg)_{jl} + nabla_j (Lg)_{il}
//                          - nabla_l (Lg)_{ij})
Tensor lie_connection(const PointGeometry& geo, const FieldDef& xi,
                      const PointCoords& p, LieRoute route);

// Harmonic-map tension field of a map f between charts, evaluated at p.
// Returns the target-chart vector tau^alpha. Throws EvalDomainError if
// f(p) leaves the target sample domain.
Tensor tension_field(const PointGeometry& source_geo, const FieldDef& f,
                     const PointCoords& p);

}  // namespace rgeom
