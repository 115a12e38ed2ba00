#pragma once

#include <optional>

#include "rgeom/residuals.hpp"

namespace rgeom {

enum class SolitonKind { Generic, Gradient };
enum class SolitonClass { Steady, Shrinking, Expanding };

std::string to_string(SolitonClass c);

// A soliton candidate: (chart, xi or potential F, lambda). The lambda sign
// convention follows -2 Ric = L_xi g + 2 lambda g, so shrinking means
// lambda < 0 (see docs/conventions.md for the mapping to the common
// Ric + Hess f = lambda g form).
struct SolitonSpec {
  std::shared_ptr<const Chart> chart;
  SolitonKind kind = SolitonKind::Generic;
  std::optional<FieldDef> xi;        // Generic
  std::optional<FieldDef> potential; // Gradient
  double lambda = 0.0;

  const FieldDef& field() const {
    return kind == SolitonKind::Gradient ? *potential : *xi;
  }
};

// Classification by sign of lambda alone.
SolitonClass classify(const SolitonSpec& spec);

// Residual of the defining equation:
//   generic:  2 Ric + L_xi g + 2 lambda g
//   gradient: 2 Ric + 2 Hess F + 2 lambda g
ResidualSample soliton_residual(const PointGeometry& geo,
                                const SolitonSpec& spec,
                                const PointCoords& p);

// |Delta F - s - n lambda| with Delta F = -trace_g Hess F. Gradient only.
double trace_identity_residual(const PointGeometry& geo,
                               const SolitonSpec& spec, const PointCoords& p);

// ds - 2 Ric* dF as a 1-form. Gradient only; needs order-3 geometry.
ResidualSample hamilton_identity_residual(const PointGeometry& geo,
                                          const SolitonSpec& spec,
                                          const PointCoords& p);

// Delegates to iht_residual on xi (resp. grad F).
ResidualSample iht_of_soliton_residual(const PointGeometry& geo,
                                       const SolitonSpec& spec,
                                       const PointCoords& p);

// Ric_{ij} xi^i xi^j; its sign separates the curvature regimes.
double ricci_quadratic_form(const PointGeometry& geo, const FieldDef& xi,
                            const PointCoords& p);

// Diagnostic residual g-norm of ds - 2 d(Delta F). Reported, never
// asserted: the identity is consistent with the trace identity only where
// ds = 0. Needs order-3 geometry.
double scalar_potential_diagnostic(const PointGeometry& geo,
                                   const SolitonSpec& spec,
                                   const PointCoords& p);

}  // namespace rgeom
