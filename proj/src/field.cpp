#include "rgeom/field.hpp"

namespace rgeom {

std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Scalar: return "scalar";
    case FieldKind::OneForm: return "oneform";
    case FieldKind::Vector: return "vector";
    case FieldKind::Map: return "map";
  }
  return "?";
}

FieldKind field_kind_from_string(const std::string& s) {
  if (s == "scalar") return FieldKind::Scalar;
  if (s == "oneform") return FieldKind::OneForm;
  if (s == "vector") return FieldKind::Vector;
  if (s == "map") return FieldKind::Map;
  throw std::invalid_argument("unknown field kind '" + s + "'");
}

FieldDef::FieldDef(std::string name, std::shared_ptr<const Chart> chart,
                   FieldKind kind, std::vector<std::string> component_src,
                   std::shared_ptr<const Chart> target)
    : name_(std::move(name)),
      chart_(std::move(chart)),
      target_(std::move(target)),
      kind_(kind),
      src_(std::move(component_src)) {
  const int n = chart_->dim();
  int want = 0;
  switch (kind_) {
    case FieldKind::Scalar:
      want = 1;
      break;
    case FieldKind::OneForm:
    case FieldKind::Vector:
      want = n;
      break;
    case FieldKind::Map:
      if (!target_)
        throw std::invalid_argument("map field '" + name_ +
                                    "' needs a target chart");
      want = target_->dim();
      break;
  }
  if (static_cast<int>(src_.size()) != want)
    throw std::invalid_argument("field '" + name_ + "': expected " +
                                std::to_string(want) + " components, got " +
                                std::to_string(src_.size()));
  comp_.reserve(src_.size());
  for (const std::string& s : src_)
    comp_.emplace_back(parse_expr(s, chart_->coords()), n, 3);
}

Tensor FieldDef::values(const PointCoords& p) const {
  const int n = chart_->dim();
  if (kind_ == FieldKind::Scalar) {
    Tensor t(n, 0);
    t.flat(0) = comp_[0].eval(p);
    return t;
  }
  Tensor t(n, 1);
  for (int c = 0; c < ncomp(); ++c) t.at(c) = comp_[c].eval(p);
  return t;
}

Tensor FieldDef::d1(const PointCoords& p) const {
  const int n = chart_->dim();
  if (kind_ == FieldKind::Scalar) {
    Tensor t(n, 1);
    for (int a = 0; a < n; ++a) t.at(a) = comp_[0].eval_deriv({a}, p);
    return t;
  }
  Tensor t(n, 2);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < ncomp(); ++c)
      t.at(a, c) = comp_[c].eval_deriv({a}, p);
  return t;
}

Tensor FieldDef::d2(const PointCoords& p) const {
  const int n = chart_->dim();
  if (kind_ == FieldKind::Scalar) {
    Tensor t(n, 2);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t.at(a, b) = comp_[0].eval_deriv({a, b}, p);
    return t;
  }
  Tensor t(n, 3);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < ncomp(); ++c)
        t.at(a, b, c) = comp_[c].eval_deriv({a, b}, p);
  return t;
}

Tensor FieldDef::d3(const PointCoords& p) const {
  const int n = chart_->dim();
  if (kind_ == FieldKind::Scalar) {
    Tensor t(n, 3);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          t.at(a, b, c) = comp_[0].eval_deriv({a, b, c}, p);
    return t;
  }
  Tensor t(n, 4);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < ncomp(); ++d)
          t.at(a, b, c, d) = comp_[d].eval_deriv({a, b, c}, p);
  return t;
}

}  // namespace rgeom
