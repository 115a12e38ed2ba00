#include "rgeom/operators.hpp"

#include <cmath>

namespace rgeom {

OneFormData oneform_data(const MetricJet& jet, const FieldDef& f,
                         const PointCoords& p) {
  const int n = jet.g.dim();
  OneFormData out;
  switch (f.kind()) {
    case FieldKind::OneForm: {
      out.theta = f.values(p);
      out.dtheta = f.d1(p);
      out.d2theta = f.d2(p);
      return out;
    }
    case FieldKind::Scalar: {
      // theta = dF
      out.theta = f.d1(p);
      out.dtheta = f.d2(p);
      out.d2theta = f.d3(p);
      return out;
    }
    case FieldKind::Vector: {
      Tensor xi = f.values(p), dxi = f.d1(p), d2xi = f.d2(p);
      out.theta = Tensor(n, 1);
      out.dtheta = Tensor(n, 2);
      out.d2theta = Tensor(n, 3);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          out.theta.at(j) += jet.g.at(j, k) * xi.at(k);
          for (int a = 0; a < n; ++a) {
            out.dtheta.at(a, j) += jet.dg.at(a, j, k) * xi.at(k) +
                                   jet.g.at(j, k) * dxi.at(a, k);
            for (int b = 0; b < n; ++b)
              out.d2theta.at(a, b, j) +=
                  jet.d2g.at(a, b, j, k) * xi.at(k) +
                  jet.dg.at(a, j, k) * dxi.at(b, k) +
                  jet.dg.at(b, j, k) * dxi.at(a, k) +
                  jet.g.at(j, k) * d2xi.at(a, b, k);
          }
        }
      return out;
    }
    case FieldKind::Map:
      break;
  }
  throw std::invalid_argument("oneform_data: field kind has no 1-form");
}

VectorData vector_data(const MetricJet& jet, const FieldDef& f,
                       const PointCoords& p) {
  const int n = jet.g.dim();
  if (f.kind() == FieldKind::Vector) {
    return {f.values(p), f.d1(p), f.d2(p)};
  }
  // raise a 1-form (or dF) through g^{-1} with product-rule partials
  OneFormData th = oneform_data(jet, f, p);
  Tensor dginv = inverse_metric_partials(jet);
  Tensor d2ginv(n, 4);
  for (int m = 0; m < n; ++m)
    for (int l = 0; l < n; ++l)
      for (int pp = 0; pp < n; ++pp)
        for (int q = 0; q < n; ++q) {
          double v = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              v -= dginv.at(m, pp, a) * jet.dg.at(l, a, b) * jet.ginv.at(b, q) +
                   jet.ginv.at(pp, a) * jet.d2g.at(m, l, a, b) *
                       jet.ginv.at(b, q) +
                   jet.ginv.at(pp, a) * jet.dg.at(l, a, b) * dginv.at(m, b, q);
          d2ginv.at(m, l, pp, q) = v;
        }
  VectorData out;
  out.xi = Tensor(n, 1);
  out.dxi = Tensor(n, 2);
  out.d2xi = Tensor(n, 3);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      out.xi.at(k) += jet.ginv.at(k, j) * th.theta.at(j);
      for (int a = 0; a < n; ++a) {
        out.dxi.at(a, k) += dginv.at(a, k, j) * th.theta.at(j) +
                            jet.ginv.at(k, j) * th.dtheta.at(a, j);
        for (int b = 0; b < n; ++b)
          out.d2xi.at(a, b, k) += d2ginv.at(a, b, k, j) * th.theta.at(j) +
                                  dginv.at(a, k, j) * th.dtheta.at(b, j) +
                                  dginv.at(b, k, j) * th.dtheta.at(a, j) +
                                  jet.ginv.at(k, j) * th.d2theta.at(a, b, j);
      }
    }
  return out;
}

Tensor flat(const MetricJet& jet, const Tensor& xi) {
  const int n = jet.g.dim();
  Tensor th(n, 1);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) th.at(j) += jet.g.at(j, k) * xi.at(k);
  return th;
}

Tensor sharp(const MetricJet& jet, const Tensor& theta) {
  const int n = jet.g.dim();
  Tensor xi(n, 1);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) xi.at(k) += jet.ginv.at(k, j) * theta.at(j);
  return xi;
}

double codifferential(const PointGeometry& geo, const OneFormData& th) {
  const int n = geo.jet.g.dim();
  Tensor nth = nabla_oneform(th.theta, th.dtheta, geo.gamma);
  double v = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v -= geo.jet.ginv.at(i, j) * nth.at(i, j);
  return v;
}

Tensor hodge_laplacian_1form(const PointGeometry& geo, const OneFormData& th) {
  const int n = geo.jet.g.dim();
  Tensor dginv = inverse_metric_partials(geo.jet);

  // dd* part: (dd* theta)_k = -d_k ( g^{ij} (d_i theta_j - Gamma^l_ij theta_l) )
  Tensor ddstar(n, 1);
  for (int k = 0; k < n; ++k) {
    double v = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double div_ij = th.dtheta.at(i, j);
        double ddiv_ij = th.d2theta.at(k, i, j);
        for (int l = 0; l < n; ++l) {
          div_ij -= geo.gamma.at(l, i, j) * th.theta.at(l);
          ddiv_ij -= geo.dgamma.at(k, l, i, j) * th.theta.at(l) +
                     geo.gamma.at(l, i, j) * th.dtheta.at(k, l);
        }
        v -= dginv.at(k, i, j) * div_ij + geo.jet.ginv.at(i, j) * ddiv_ij;
      }
    ddstar.at(k) = v;
  }

  // d*d part through the exterior derivative 2-form omega = d theta
  Tensor omega(n, 2), domega(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      omega.at(i, j) = th.dtheta.at(i, j) - th.dtheta.at(j, i);
      for (int a = 0; a < n; ++a)
        domega.at(a, i, j) = th.d2theta.at(a, i, j) - th.d2theta.at(a, j, i);
    }
  Tensor dstard(n, 1);
  for (int j = 0; j < n; ++j) {
    double v = 0.0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        double nom = domega.at(i, k, j);
        for (int m = 0; m < n; ++m)
          nom -= geo.gamma.at(m, i, k) * omega.at(m, j) +
                 geo.gamma.at(m, i, j) * omega.at(k, m);
        v -= geo.jet.ginv.at(i, k) * nom;
      }
    dstard.at(j) = v;
  }
  return ddstar + dstard;
}

Tensor bochner_laplacian_1form(const PointGeometry& geo,
                               const OneFormData& th) {
  const int n = geo.jet.g.dim();
  Tensor n2 = nabla2_oneform(th.theta, th.dtheta, th.d2theta, geo.gamma,
                             geo.dgamma);
  Tensor out(n, 1);
  for (int k = 0; k < n; ++k) {
    double v = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        v -= geo.jet.ginv.at(i, j) * n2.at(i, j, k);
    out.at(k) = v;
  }
  return out;
}

Tensor ricci_star_vector(const PointGeometry& geo, const Tensor& xi) {
  const int n = geo.jet.g.dim();
  Tensor out(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.at(i) += geo.jet.ginv.at(i, j) * geo.ric.at(j, k) * xi.at(k);
  return out;
}

Tensor ricci_star_oneform(const PointGeometry& geo, const Tensor& theta) {
  const int n = geo.jet.g.dim();
  Tensor out(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m)
        out.at(i) += geo.ric.at(i, m) * geo.jet.ginv.at(m, j) * theta.at(j);
  return out;
}

Tensor delta_star(const PointGeometry& geo, const OneFormData& th) {
  const int n = geo.jet.g.dim();
  Tensor nth = nabla_oneform(th.theta, th.dtheta, geo.gamma);
  Tensor out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = nth.at(i, j) + nth.at(j, i);
  return out;
}

Tensor delta_sym2(const PointGeometry& geo, const Tensor& h, const Tensor& dh) {
  const int n = geo.jet.g.dim();
  Tensor out(n, 1);
  for (int j = 0; j < n; ++j) {
    double v = 0.0;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        double nh = dh.at(i, k, j);
        for (int m = 0; m < n; ++m)
          nh -= geo.gamma.at(m, i, k) * h.at(m, j) +
                geo.gamma.at(m, i, j) * h.at(k, m);
        v -= geo.jet.ginv.at(i, k) * nh;
      }
    out.at(j) = v;
  }
  return out;
}

YanoRoute yano_route_from_string(const std::string& s) {
  if (s == "direct") return YanoRoute::Direct;
  if (s == "hodge") return YanoRoute::Hodge;
  if (s == "bochner") return YanoRoute::Bochner;
  throw std::invalid_argument("unknown Yano route '" + s + "'");
}

OperatorResult yano_box(const PointGeometry& geo, const OneFormData& th,
                        YanoRoute route) {
  const int n = geo.jet.g.dim();
  Tensor box(n, 1);
  std::string tag;
  switch (route) {
    case YanoRoute::Direct: {
      tag = "direct";
      Tensor n2 = nabla2_oneform(th.theta, th.dtheta, th.d2theta, geo.gamma,
                                 geo.dgamma);
      for (int j = 0; j < n; ++j) {
        double v = 0.0;
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k)
            v -= geo.jet.ginv.at(i, k) *
                 (n2.at(i, k, j) + n2.at(i, j, k) - n2.at(j, i, k));
        box.at(j) = v;
      }
      break;
    }
    case YanoRoute::Hodge: {
      tag = "hodge";
      box = hodge_laplacian_1form(geo, th);
      box -= 2.0 * ricci_star_oneform(geo, th.theta);
      break;
    }
    case YanoRoute::Bochner: {
      tag = "bochner";
      box = bochner_laplacian_1form(geo, th);
      box -= ricci_star_oneform(geo, th.theta);
      break;
    }
  }
  return {{{Slot::Lower}, box}, tag};
}

Tensor lie_metric(const PointGeometry& geo, const OneFormData& th) {
  return delta_star(geo, th);
}

LieRoute lie_route_from_string(const std::string& s) {
  if (s == "direct") return LieRoute::Direct;
  if (s == "via_metric") return LieRoute::ViaMetric;
  throw std::invalid_argument("unknown Lie route '" + s + "'");
}

Tensor lie_connection(const PointGeometry& geo, const FieldDef& xi,
                      const PointCoords& p, LieRoute route) {
  const int n = geo.jet.g.dim();
  Tensor out(n, 3);
  if (route == LieRoute::Direct) {
    VectorData v = vector_data(geo.jet, xi, p);
    Tensor n2 = nabla2_vector(v.xi, v.dxi, v.d2xi, geo.gamma, geo.dgamma);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double val = n2.at(i, j, k);
          for (int l = 0; l < n; ++l)
            val += geo.riem.at(k, j, l, i) * v.xi.at(l);
          out.at(k, i, j) = val;
        }
    return out;
  }
  OneFormData th = oneform_data(geo.jet, xi, p);
  Tensor n2 = nabla2_oneform(th.theta, th.dtheta, th.d2theta, geo.gamma,
                             geo.dgamma);
  // nabla_a (L g)_{bc} = nabla2(a,b,c) + nabla2(a,c,b)
  auto N = [&](int a, int b, int c) { return n2.at(a, b, c) + n2.at(a, c, b); };
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double val = 0.0;
        for (int l = 0; l < n; ++l)
          val += 0.5 * geo.jet.ginv.at(k, l) *
                 (N(i, j, l) + N(j, i, l) - N(l, i, j));
        out.at(k, i, j) = val;
      }
  return out;
}

Tensor tension_field(const PointGeometry& source_geo, const FieldDef& f,
                     const PointCoords& p) {
  if (f.kind() != FieldKind::Map)
    throw std::invalid_argument("tension_field: field is not a map");
  const Chart& target = f.target();
  const int n = source_geo.jet.g.dim();
  const int nt = target.dim();

  PointCoords fp(nt);
  for (int a = 0; a < nt; ++a) fp[a] = f.component(a).eval(p);
  if (!target.domain().contains(fp))
    throw EvalDomainError("map image outside target chart domain", fp);

  std::vector<std::vector<double>> df(n, std::vector<double>(nt));
  std::vector<std::vector<std::vector<double>>> d2f(
      n, std::vector<std::vector<double>>(n, std::vector<double>(nt)));
  for (int a = 0; a < nt; ++a)
    for (int i = 0; i < n; ++i) {
      df[i][a] = f.component(a).eval_deriv({i}, p);
      for (int j = 0; j < n; ++j)
        d2f[i][j][a] = f.component(a).eval_deriv({i, j}, p);
    }

  Tensor gammaT = christoffel(metric_jet(target, fp));

  Tensor tau(nt, 1);
  for (int a = 0; a < nt; ++a) {
    double v = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double term = d2f[i][j][a];
        for (int k = 0; k < n; ++k)
          term -= source_geo.gamma.at(k, i, j) * df[k][a];
        for (int b = 0; b < nt; ++b)
          for (int c = 0; c < nt; ++c)
            term += gammaT.at(a, b, c) * df[i][b] * df[j][c];
        v += source_geo.jet.ginv.at(i, j) * term;
      }
    tau.at(a) = v;
  }
  return tau;
}

}  // namespace rgeom
