#include "rgeom/geometry.hpp"

#include <cmath>

namespace rgeom {

namespace {

// Dense inverse via Gauss-Jordan with partial pivoting; n <= 4 in practice.
Tensor invert(const Tensor& m) {
  const int n = m.dim();
  std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n + i] = 1.0;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) throw ChartError("singular metric matrix");
    std::swap(a[piv], a[c]);
    double d = a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = a[r][c];
      if (f == 0.0) continue;
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Tensor inv(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = a[i][n + j];
  return inv;
}

}  // namespace

Tensor inverse_metric_partials(const MetricJet& jet) {
  const int n = jet.g.dim();
  Tensor out(n, 3);
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        double v = 0.0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            v -= jet.ginv.at(p, a) * jet.dg.at(k, a, b) * jet.ginv.at(b, q);
        out.at(k, p, q) = v;
      }
  return out;
}

namespace {

// d2ginv(m,l,p,q) = d_m d_l g^pq
Tensor inverse_second_partials(const MetricJet& jet, const Tensor& dginv) {
  const int n = jet.g.dim();
  Tensor out(n, 4);
  for (int m = 0; m < n; ++m)
    for (int l = 0; l < n; ++l)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          double v = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              v -= dginv.at(m, p, a) * jet.dg.at(l, a, b) * jet.ginv.at(b, q);
              v -= jet.ginv.at(p, a) * jet.d2g.at(m, l, a, b) *
                   jet.ginv.at(b, q);
              v -= jet.ginv.at(p, a) * jet.dg.at(l, a, b) * dginv.at(m, b, q);
            }
          out.at(m, l, p, q) = v;
        }
  return out;
}

}  // namespace

MetricJet metric_jet(const Chart& chart, const PointCoords& p) {
  const int n = chart.dim();
  if (static_cast<int>(p.size()) != n)
    throw ChartError("point dimension != chart dimension");
  chart.check_positive_definite(p);
  MetricJet jet;
  jet.chart = &chart;
  jet.point = p;
  jet.g = Tensor(n, 2);
  jet.dg = Tensor(n, 3);
  jet.d2g = Tensor(n, 4);
  jet.d3g = Tensor(n, 5);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const DerivTable& e = chart.metric(i, j);
      jet.g.at(i, j) = e.eval(p);
      for (int k = 0; k < n; ++k) {
        jet.dg.at(k, i, j) = e.eval_deriv({k}, p);
        for (int l = 0; l < n; ++l) {
          jet.d2g.at(l, k, i, j) = e.eval_deriv({l, k}, p);
          for (int m = 0; m < n; ++m)
            jet.d3g.at(m, l, k, i, j) = e.eval_deriv({m, l, k}, p);
        }
      }
    }
  jet.ginv = invert(jet.g);
  return jet;
}

Tensor christoffel(const MetricJet& jet) {
  const int n = jet.g.dim();
  Tensor gamma(n, 3);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double v = 0.0;
        for (int m = 0; m < n; ++m)
          v += 0.5 * jet.ginv.at(k, m) *
               (jet.dg.at(i, j, m) + jet.dg.at(j, i, m) - jet.dg.at(m, i, j));
        gamma.at(k, i, j) = v;
      }
  return gamma;
}

Tensor christoffel_partials(const MetricJet& jet) {
  const int n = jet.g.dim();
  Tensor dginv = inverse_metric_partials(jet);
  Tensor out(n, 4);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double v = 0.0;
          for (int m = 0; m < n; ++m) {
            double A = jet.dg.at(i, j, m) + jet.dg.at(j, i, m) -
                       jet.dg.at(m, i, j);
            double dA = jet.d2g.at(l, i, j, m) + jet.d2g.at(l, j, i, m) -
                        jet.d2g.at(l, m, i, j);
            v += 0.5 * (dginv.at(l, k, m) * A + jet.ginv.at(k, m) * dA);
          }
          out.at(l, k, i, j) = v;
        }
  return out;
}

Tensor christoffel_second_partials(const MetricJet& jet) {
  const int n = jet.g.dim();
  Tensor dginv = inverse_metric_partials(jet);
  Tensor d2ginv = inverse_second_partials(jet, dginv);
  Tensor out(n, 5);
  for (int m = 0; m < n; ++m)
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            double v = 0.0;
            for (int p = 0; p < n; ++p) {
              double A = jet.dg.at(i, j, p) + jet.dg.at(j, i, p) -
                         jet.dg.at(p, i, j);
              double dA_l = jet.d2g.at(l, i, j, p) + jet.d2g.at(l, j, i, p) -
                            jet.d2g.at(l, p, i, j);
              double dA_m = jet.d2g.at(m, i, j, p) + jet.d2g.at(m, j, i, p) -
                            jet.d2g.at(m, p, i, j);
              double d2A = jet.d3g.at(m, l, i, j, p) +
                           jet.d3g.at(m, l, j, i, p) -
                           jet.d3g.at(m, l, p, i, j);
              v += 0.5 * (d2ginv.at(m, l, k, p) * A +
                          dginv.at(l, k, p) * dA_m + dginv.at(m, k, p) * dA_l +
                          jet.ginv.at(k, p) * d2A);
            }
            out.at(m, l, k, i, j) = v;
          }
  return out;
}

Tensor riemann(const MetricJet& jet) {
  const int n = jet.g.dim();
  Tensor gamma = christoffel(jet);
  Tensor dgamma = christoffel_partials(jet);
  Tensor R(n, 4);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double v = dgamma.at(i, k, j, l) - dgamma.at(j, k, i, l);
          for (int m = 0; m < n; ++m)
            v += gamma.at(k, i, m) * gamma.at(m, j, l) -
                 gamma.at(k, j, m) * gamma.at(m, i, l);
          R.at(k, l, i, j) = v;
        }
  return R;
}

Tensor ricci(const MetricJet& jet) {
  const int n = jet.g.dim();
  Tensor R = riemann(jet);
  Tensor ric(n, 2);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int i = 0; i < n; ++i) v += R.at(i, l, i, j);
      ric.at(l, j) = v;
    }
  return ric;
}

double scalar_curvature(const MetricJet& jet) {
  const int n = jet.g.dim();
  Tensor ric = ricci(jet);
  double s = 0.0;
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j) s += jet.ginv.at(l, j) * ric.at(l, j);
  return s;
}

PointGeometry point_geometry(const Chart& chart, const PointCoords& p,
                             int order) {
  PointGeometry geo;
  geo.jet = metric_jet(chart, p);
  geo.order = order;
  geo.gamma = christoffel(geo.jet);
  geo.dgamma = christoffel_partials(geo.jet);
  geo.riem = riemann(geo.jet);
  geo.ric = ricci(geo.jet);
  geo.s = scalar_curvature(geo.jet);
  if (order >= 3) {
    const int n = chart.dim();
    geo.d2gamma = christoffel_second_partials(geo.jet);
    geo.dric = Tensor(n, 3);
    for (int a = 0; a < n; ++a)
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) {
          double v = 0.0;
          for (int i = 0; i < n; ++i) {
            v += geo.d2gamma.at(a, i, i, j, l) - geo.d2gamma.at(a, j, i, i, l);
            for (int m = 0; m < n; ++m)
              v += geo.dgamma.at(a, i, i, m) * geo.gamma.at(m, j, l) +
                   geo.gamma.at(i, i, m) * geo.dgamma.at(a, m, j, l) -
                   geo.dgamma.at(a, i, j, m) * geo.gamma.at(m, i, l) -
                   geo.gamma.at(i, j, m) * geo.dgamma.at(a, m, i, l);
          }
          geo.dric.at(a, l, j) = v;
        }
    Tensor dginv = inverse_metric_partials(geo.jet);
    geo.ds = Tensor(n, 1);
    for (int a = 0; a < n; ++a) {
      double v = 0.0;
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
          v += dginv.at(a, l, j) * geo.ric.at(l, j) +
               geo.jet.ginv.at(l, j) * geo.dric.at(a, l, j);
      geo.ds.at(a) = v;
    }
  }
  return geo;
}

TensorValue covariant_derivative(const TensorValue& T, const Tensor& dT,
                                 const Tensor& gamma) {
  const int n = gamma.dim();
  const int rank = T.comp.rank();
  TensorValue out;
  out.slots.reserve(rank + 1);
  out.slots.push_back(Slot::Lower);
  for (Slot s : T.slots) out.slots.push_back(s);
  out.comp = Tensor(n, rank + 1);
  for (std::size_t f = 0; f < out.comp.size(); ++f) {
    std::vector<int> idx = out.comp.unflatten(f);
    const int a = idx[0];
    std::vector<int> tidx(idx.begin() + 1, idx.end());
    // dT has the derivative axis first, matching idx directly
    double v = dT.flat(f);
    for (int r = 0; r < rank; ++r) {
      std::vector<int> sub = tidx;
      for (int m = 0; m < n; ++m) {
        sub[r] = m;
        std::size_t off = 0;
        for (int q : sub) off = off * n + q;
        double tv = T.comp.flat(off);
        if (T.slots[r] == Slot::Upper)
          v += gamma.at(tidx[r], a, m) * tv;
        else
          v -= gamma.at(m, a, tidx[r]) * tv;
      }
    }
    out.comp.flat(f) = v;
  }
  return out;
}

Tensor hessian(const Tensor& dF, const Tensor& d2F, const Tensor& gamma) {
  const int n = gamma.dim();
  Tensor h(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = d2F.at(i, j);
      for (int k = 0; k < n; ++k) v -= gamma.at(k, i, j) * dF.at(k);
      h.at(i, j) = v;
    }
  return h;
}

Tensor nabla_oneform(const Tensor& theta, const Tensor& dtheta,
                     const Tensor& gamma) {
  const int n = gamma.dim();
  Tensor out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double v = dtheta.at(i, j);
      for (int k = 0; k < n; ++k) v -= gamma.at(k, i, j) * theta.at(k);
      out.at(i, j) = v;
    }
  return out;
}

Tensor nabla2_oneform(const Tensor& theta, const Tensor& dtheta,
                      const Tensor& d2theta, const Tensor& gamma,
                      const Tensor& dgamma) {
  const int n = gamma.dim();
  Tensor nth = nabla_oneform(theta, dtheta, gamma);
  Tensor out(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // d_i of (nabla theta)_{jk}
        double v = d2theta.at(i, j, k);
        for (int l = 0; l < n; ++l)
          v -= dgamma.at(i, l, j, k) * theta.at(l) +
               gamma.at(l, j, k) * dtheta.at(i, l);
        for (int m = 0; m < n; ++m)
          v -= gamma.at(m, i, j) * nth.at(m, k) +
               gamma.at(m, i, k) * nth.at(j, m);
        out.at(i, j, k) = v;
      }
  return out;
}

Tensor nabla_vector(const Tensor& xi, const Tensor& dxi, const Tensor& gamma) {
  const int n = gamma.dim();
  Tensor out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double v = dxi.at(i, k);
      for (int l = 0; l < n; ++l) v += gamma.at(k, i, l) * xi.at(l);
      out.at(i, k) = v;
    }
  return out;
}

Tensor nabla2_vector(const Tensor& xi, const Tensor& dxi, const Tensor& d2xi,
                     const Tensor& gamma, const Tensor& dgamma) {
  const int n = gamma.dim();
  Tensor nxi = nabla_vector(xi, dxi, gamma);
  Tensor out(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = d2xi.at(i, j, k);
        for (int l = 0; l < n; ++l)
          v += dgamma.at(i, k, j, l) * xi.at(l) +
               gamma.at(k, j, l) * dxi.at(i, l);
        for (int m = 0; m < n; ++m)
          v += gamma.at(k, i, m) * nxi.at(j, m) -
               gamma.at(m, i, j) * nxi.at(m, k);
        out.at(i, j, k) = v;
      }
  return out;
}

double g_norm(const MetricJet& jet, const TensorValue& T) {
  const int n = jet.g.dim();
  const int rank = T.comp.rank();
  if (rank == 0) return std::abs(T.comp.flat(0));
  double acc = 0.0;
  for (std::size_t fa = 0; fa < T.comp.size(); ++fa) {
    if (T.comp.flat(fa) == 0.0) continue;
    std::vector<int> ia = T.comp.unflatten(fa);
    for (std::size_t fb = 0; fb < T.comp.size(); ++fb) {
      double prod = T.comp.flat(fa) * T.comp.flat(fb);
      if (prod == 0.0) continue;
      std::vector<int> ib = T.comp.unflatten(fb);
      for (int r = 0; r < rank; ++r) {
        prod *= (T.slots[r] == Slot::Upper) ? jet.g.at(ia[r], ib[r])
                                            : jet.ginv.at(ia[r], ib[r]);
        if (prod == 0.0) break;
      }
      acc += prod;
    }
  }
  // rounding can push a tiny norm-squared slightly negative
  return std::sqrt(std::max(acc, 0.0));
}

double bianchi_residual(const PointGeometry& geo) {
  if (geo.order < 3)
    throw std::logic_error("bianchi_residual requires order-3 geometry");
  const int n = geo.jet.g.dim();
  TensorValue res{{Slot::Lower}, Tensor(n, 1)};
  for (int l = 0; l < n; ++l) {
    double v = -geo.ds.at(l);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // nabla_k Ric_{jl}
        double nr = geo.dric.at(k, j, l);
        for (int m = 0; m < n; ++m)
          nr -= geo.gamma.at(m, k, j) * geo.ric.at(m, l) +
                geo.gamma.at(m, k, l) * geo.ric.at(j, m);
        v += 2.0 * geo.jet.ginv.at(j, k) * nr;
      }
    res.comp.at(l) = v;
  }
  return g_norm(geo.jet, res);
}

}  // namespace rgeom
