#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgeom/expr.hpp"

namespace rgeom {

class ChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Axis-aligned sample box with per-axis bounds and sample counts.
struct DomainBox {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<int> grid;      // samples per axis (grid strategy)
  std::string strategy = "grid";  // "grid" | "halton"

  bool contains(const PointCoords& p, double margin = 0.0) const {
    if (p.size() != lo.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] < lo[i] + margin || p[i] > hi[i] - margin) return false;
    return true;
  }
};

// Symbolic derivative cache for one scalar expression: derivative trees for
// every multi-index up to max_order, keyed by the sorted axis list.
class DerivTable {
 public:
  DerivTable() = default;
  DerivTable(Expr e, int dim, int max_order);

  const Expr& base() const { return base_; }
  int max_order() const { return max_order_; }

  // axes need not be sorted; mixed partials commute.
  const Expr& deriv(std::vector<int> axes) const;
  double eval(const PointCoords& p) const { return base_.eval(p); }
  double eval_deriv(std::vector<int> axes, const PointCoords& p) const {
    return deriv(std::move(axes)).eval(p);
  }

 private:
  Expr base_;
  int max_order_ = 0;
  std::map<std::vector<int>, Expr> derivs_;
};

// A coordinate patch: dimension, coordinate names, symmetric matrix of
// metric expressions, optional complex structure J, and a sample domain.
// Original component source strings are retained for manifest export.
class Chart {
 public:
  // metric_src is the full n x n matrix of expression strings; entries
  // (i,j) and (j,i) must parse to structurally equal trees or only the
  // upper triangle may be given (lower entries empty).
  Chart(std::string name, std::vector<std::string> coords,
        std::vector<std::vector<std::string>> metric_src, DomainBox domain,
        std::optional<std::vector<std::vector<std::string>>> complex_src =
            std::nullopt);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  const DomainBox& domain() const { return domain_; }
  bool has_complex_structure() const { return !j_.empty(); }

  const DerivTable& metric(int i, int j) const;
  const DerivTable& complex_structure(int i, int j) const;
  const std::string& metric_src(int i, int j) const {
    return metric_src_[i][j];
  }
  const std::vector<std::vector<std::string>>& complex_src() const {
    return j_src_;
  }

  // Positive definiteness via leading principal minors; throws ChartError.
  void check_positive_definite(const PointCoords& p) const;
  // J^2 = -id and g(J.,J.) = g at p, within tol; throws ChartError.
  void check_complex_structure(const PointCoords& p, double tol = 1e-10) const;

 private:
  std::string name_;
  std::vector<std::string> coords_;
  std::vector<std::vector<std::string>> metric_src_;
  std::vector<std::vector<DerivTable>> g_;
  std::vector<std::vector<std::string>> j_src_;
  std::vector<std::vector<DerivTable>> j_;
  DomainBox domain_;
};

}  // namespace rgeom
