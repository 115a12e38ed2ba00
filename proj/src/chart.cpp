#include "rgeom/chart.hpp"

#include <algorithm>
#include <cmath>

namespace rgeom {

DerivTable::DerivTable(Expr e, int dim, int max_order)
    : base_(std::move(e)), max_order_(max_order) {
  derivs_[{}] = base_;
  std::vector<std::vector<int>> frontier{{}};
  for (int order = 1; order <= max_order; ++order) {
    std::vector<std::vector<int>> next;
    for (const auto& idx : frontier) {
      int start = idx.empty() ? 0 : idx.back();
      for (int a = start; a < dim; ++a) {
        std::vector<int> ext = idx;
        ext.push_back(a);
        derivs_[ext] = derivs_[idx].diff(a);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
}

const Expr& DerivTable::deriv(std::vector<int> axes) const {
  std::sort(axes.begin(), axes.end());
  auto it = derivs_.find(axes);
  if (it == derivs_.end())
    throw std::out_of_range("DerivTable: derivative order not cached");
  return it->second;
}

Chart::Chart(std::string name, std::vector<std::string> coords,
             std::vector<std::vector<std::string>> metric_src, DomainBox domain,
             std::optional<std::vector<std::vector<std::string>>> complex_src)
    : name_(std::move(name)),
      coords_(std::move(coords)),
      domain_(std::move(domain)) {
  const int n = dim();
  if (n < 2) throw ChartError("chart dimension must be >= 2");
  if (static_cast<int>(metric_src.size()) != n)
    throw ChartError("metric matrix row count != dimension");
  metric_src_.assign(n, std::vector<std::string>(n));
  g_.assign(n, std::vector<DerivTable>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(metric_src[i].size()) != n)
      throw ChartError("metric matrix column count != dimension");
    for (int j = i; j < n; ++j) {
      std::string src = metric_src[i][j];
      if (src.empty()) src = metric_src[j][i];  // upper triangle given
      if (src.empty())
        throw ChartError("missing metric entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      metric_src_[i][j] = metric_src_[j][i] = src;
      g_[i][j] = DerivTable(parse_expr(src, coords_), n, 3);
      g_[j][i] = g_[i][j];
    }
  }
  if (static_cast<int>(domain_.lo.size()) != n ||
      static_cast<int>(domain_.hi.size()) != n)
    throw ChartError("domain bounds size != dimension");
  for (int i = 0; i < n; ++i)
    if (!(domain_.lo[i] < domain_.hi[i]))
      throw ChartError("degenerate domain box on axis " + std::to_string(i));
  if (complex_src) {
    if (n % 2 != 0)
      throw ChartError("complex structure requires even dimension");
    j_src_ = *complex_src;
    if (static_cast<int>(j_src_.size()) != n)
      throw ChartError("complex structure matrix size != dimension");
    j_.assign(n, std::vector<DerivTable>(n));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(j_src_[i].size()) != n)
        throw ChartError("complex structure matrix size != dimension");
      for (int j = 0; j < n; ++j)
        j_[i][j] = DerivTable(parse_expr(j_src_[i][j], coords_), n, 1);
    }
  }
}

const DerivTable& Chart::metric(int i, int j) const { return g_[i][j]; }

const DerivTable& Chart::complex_structure(int i, int j) const {
  if (j_.empty()) throw ChartError("chart has no complex structure");
  return j_[i][j];
}

void Chart::check_positive_definite(const PointCoords& p) const {
  const int n = dim();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = g_[i][j].eval(p);
  // leading principal minors via in-place elimination
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<double>> sub(k, std::vector<double>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = m[i][j];
    double det = 1.0;
    for (int c = 0; c < k; ++c) {
      int piv = c;
      for (int r = c + 1; r < k; ++r)
        if (std::abs(sub[r][c]) > std::abs(sub[piv][c])) piv = r;
      if (piv != c) {
        std::swap(sub[piv], sub[c]);
        det = -det;
      }
      if (sub[c][c] == 0.0) {
        det = 0.0;
        break;
      }
      det *= sub[c][c];
      for (int r = c + 1; r < k; ++r) {
        double f = sub[r][c] / sub[c][c];
        for (int j = c; j < k; ++j) sub[r][j] -= f * sub[c][j];
      }
    }
    if (!(det > 0.0))
      throw ChartError("metric not positive-definite on chart '" + name_ +
                       "' (leading minor " + std::to_string(k) + " <= 0)");
  }
}

void Chart::check_complex_structure(const PointCoords& p, double tol) const {
  if (j_.empty()) throw ChartError("chart has no complex structure");
  const int n = dim();
  std::vector<std::vector<double>> J(n, std::vector<double>(n)),
      g(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      J[i][j] = j_[i][j].eval(p);
      g[i][j] = g_[i][j].eval(p);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double jj = 0.0;
      for (int k = 0; k < n; ++k) jj += J[i][k] * J[k][j];
      double want = (i == j) ? -1.0 : 0.0;
      if (std::abs(jj - want) > tol)
        throw ChartError("J^2 != -identity on chart '" + name_ + "'");
      double gJJ = 0.0;  // g(J e_i, J e_j) = J^a_i J^b_j g_ab
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gJJ += J[a][i] * J[b][j] * g[a][b];
      if (std::abs(gJJ - g[i][j]) > tol)
        throw ChartError("g(J.,J.) != g on chart '" + name_ + "'");
    }
}

}  // namespace rgeom
