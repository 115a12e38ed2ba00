#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rgeom/chart.hpp"
#include "rgeom/tensor.hpp"

namespace rgeom {

enum class FieldKind { Scalar, OneForm, Vector, Map };

std::string to_string(FieldKind k);
FieldKind field_kind_from_string(const std::string& s);

// A symbolic field on a chart: scalar, 1-form, vector, or a map into a
// target chart. Component derivative trees are cached to order 3.
class FieldDef {
 public:
  FieldDef() = default;
  FieldDef(std::string name, std::shared_ptr<const Chart> chart,
           FieldKind kind, std::vector<std::string> component_src,
           std::shared_ptr<const Chart> target = nullptr);

  const std::string& name() const { return name_; }
  FieldKind kind() const { return kind_; }
  const Chart& chart() const { return *chart_; }
  std::shared_ptr<const Chart> chart_ptr() const { return chart_; }
  const Chart& target() const { return *target_; }
  bool has_target() const { return target_ != nullptr; }
  int ncomp() const { return static_cast<int>(comp_.size()); }
  const std::vector<std::string>& component_src() const { return src_; }
  const DerivTable& component(int c) const { return comp_[c]; }

  // Component values and coordinate partials at p. For scalar fields the
  // component axis is dropped (values is rank 0, d1 rank 1, ...); for the
  // others the component index is the LAST tensor axis: d2(a,b,c) is
  // d_a d_b of component c. Maps require target dim == source dim to use
  // these (the catalog only carries equidimensional maps).
  Tensor values(const PointCoords& p) const;
  Tensor d1(const PointCoords& p) const;
  Tensor d2(const PointCoords& p) const;
  Tensor d3(const PointCoords& p) const;

 private:
  std::string name_;
  std::shared_ptr<const Chart> chart_;
  std::shared_ptr<const Chart> target_;
  FieldKind kind_ = FieldKind::Scalar;
  std::vector<std::string> src_;
  std::vector<DerivTable> comp_;
};

}  // namespace rgeom
