#pragma once

#include "rgeom/operators.hpp"

namespace rgeom {

// One residual evaluation: the tensor itself plus its pointwise g-norm.
// Classifiers never return booleans; the harness applies tolerances.
struct ResidualSample {
  PointCoords point;
  TensorValue residual;
  double gnorm = 0.0;
};

ResidualSample make_residual(const MetricJet& jet, const PointCoords& p,
                             TensorValue value);

// L_xi g (zero iff xi is an infinitesimal isometry).
ResidualSample killing_residual(const PointGeometry& geo, const FieldDef& xi,
                                const PointCoords& p);

// L_xi g + (2/n)(d* theta) g, the trace-free part of L_xi g.
ResidualSample conformal_residual(const PointGeometry& geo, const FieldDef& xi,
                                  const PointCoords& p);

// (L_xi J)^i_j; requires a chart with a complex structure.
ResidualSample holomorphic_residual(const PointGeometry& geo,
                                    const FieldDef& xi, const PointCoords& p);

// Delta theta - 2 Ric* theta (Hodge route). `cross_check` receives the
// g-norm of the Yano direct-route value when non-null.
ResidualSample iht_residual(const PointGeometry& geo, const FieldDef& xi,
                            const PointCoords& p,
                            double* cross_check = nullptr);

}  // namespace rgeom
