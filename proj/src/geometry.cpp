#include "yamabe/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "yamabe/errors.hpp"

namespace yamabe {

namespace {

// Seeds whose residual after projection falls below this are skipped.
constexpr double kNormalSeedThreshold = 1e-6;
constexpr double kRegularityThreshold = 1e-8;

Tensor4 contract_slot(const Tensor4& t, const Matrix& f, int slot) {
  const int n = t.dim();
  Tensor4 out(n);
  int idx[4];
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = 0; idx[1] < n; ++idx[1])
      for (idx[2] = 0; idx[2] < n; ++idx[2])
        for (idx[3] = 0; idx[3] < n; ++idx[3]) {
          double s = 0.0;
          int src[4] = {idx[0], idx[1], idx[2], idx[3]};
          const int a = idx[slot];
          for (int i = 0; i < n; ++i) {
            src[slot] = i;
            s += t(src[0], src[1], src[2], src[3]) * f(i, a);
          }
          out(idx[0], idx[1], idx[2], idx[3]) = s;
        }
  return out;
}

}  // namespace

double Tensor4::frobenius() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

Tensor4 Tensor4::transformed(const Matrix& frame) const {
  Tensor4 t = *this;
  for (int slot = 0; slot < 4; ++slot) t = contract_slot(t, frame, slot);
  return t;
}

Matrix g_orthonormal_frame(const Matrix& g, const Matrix& seeds) {
  const int n = static_cast<int>(g.rows());
  Matrix frame(n, n);
  int count = 0;
  auto try_add = [&](Vector v) {
    const double scale = std::sqrt(std::max(v.dot(g * v), 0.0));
    if (!(scale > 0.0)) return;
    for (int pass = 0; pass < 2; ++pass) {
      for (int c = 0; c < count; ++c) {
        v -= frame.col(c).dot(g * v) * frame.col(c);
      }
    }
    const double norm = std::sqrt(std::max(v.dot(g * v), 0.0));
    if (norm < 1e-10 * scale) return;
    frame.col(count++) = v / norm;
  };
  for (Eigen::Index s = 0; s < seeds.cols() && count < n; ++s) try_add(seeds.col(s));
  for (int i = 0; i < n && count < n; ++i) try_add(Vector::Unit(n, i));
  return frame;
}

std::vector<Matrix> metric_derivatives(const ImmersionJet2& jet) {
  const int n = jet.chart_dim();
  std::vector<Matrix> dg(n, Matrix(n, n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dg[k](i, j) = jet.d2[k].col(i).dot(jet.d1.col(j)) +
                      jet.d1.col(i).dot(jet.d2[k].col(j));
      }
    }
  }
  return dg;
}

MetricData induced_metric(const ImmersionJet2& jet) {
  const int n = jet.chart_dim();
  Eigen::JacobiSVD<Matrix> svd(jet.d1);
  const Vector& sv = svd.singularValues();
  if (sv.size() < n || sv[n - 1] < kRegularityThreshold * std::max(1.0, sv[0])) {
    throw GeometryError(ErrorKind::kDegeneratePoint,
                        "degenerate metric: tangent map is rank deficient");
  }

  MetricData md;
  md.g = jet.d1.transpose() * jet.d1;
  md.g = 0.5 * (md.g + md.g.transpose());
  Eigen::LLT<Matrix> llt(md.g);
  if (llt.info() != Eigen::Success) {
    throw GeometryError(ErrorKind::kDegeneratePoint,
                        "degenerate metric: not positive definite");
  }
  md.g_inv = llt.solve(Matrix::Identity(n, n));
  md.g_inv = 0.5 * (md.g_inv + md.g_inv.transpose());
  const Matrix l = llt.matrixL();
  md.det_g = l.diagonal().prod() * l.diagonal().prod();

  const std::vector<Matrix> dg = metric_derivatives(jet);
  md.christoffel.assign(n, Matrix::Zero(n, n));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int l2 = 0; l2 < n; ++l2) {
          s += md.g_inv(k, l2) * (dg[i](j, l2) + dg[j](i, l2) - dg[l2](i, j));
        }
        md.christoffel[k](i, j) = 0.5 * s;
        md.christoffel[k](j, i) = 0.5 * s;
      }
    }
  }
  md.orthonormal_frame = g_orthonormal_frame(md.g, Matrix::Identity(n, n));
  return md;
}

NormalFrame normal_frame(const ImmersionJet2& jet) {
  const int n = jet.chart_dim();
  const int m = jet.ambient_dim();
  Matrix q(m, m);
  int count = 0;
  auto project_out = [&](Vector v) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int c = 0; c < count; ++c) v -= q.col(c).dot(v) * q.col(c);
    }
    return v;
  };
  for (int i = 0; i < n; ++i) {
    const Vector v = project_out(jet.d1.col(i));
    const double norm = v.norm();
    if (norm < kRegularityThreshold * std::max(1.0, jet.d1.col(i).norm())) {
      throw GeometryError(ErrorKind::kDegeneratePoint,
                          "normal frame: tangent map is rank deficient");
    }
    q.col(count++) = v / norm;
  }
  for (int k = 0; k < m && count < m; ++k) {
    const Vector v = project_out(Vector::Unit(m, k));
    const double norm = v.norm();
    if (norm < kNormalSeedThreshold) continue;
    q.col(count++) = v / norm;
  }
  if (count != m) {
    throw GeometryError(ErrorKind::kDegeneratePoint,
                        "normal frame: could not complete ambient basis");
  }
  return NormalFrame{q.rightCols(m - n)};
}

Vector SecondFundamentalForm::ambient(int i, int j) const {
  Vector v = Vector::Zero(normal_basis.rows());
  for (int a = 0; a < codim(); ++a) v += h_coeffs[a](i, j) * normal_basis.col(a);
  return v;
}

Matrix SecondFundamentalForm::paired(const Vector& eta) const {
  const int n = chart_dim();
  Matrix p = Matrix::Zero(n, n);
  for (int a = 0; a < codim(); ++a) p += normal_basis.col(a).dot(eta) * h_coeffs[a];
  return p;
}

SecondFundamentalForm second_fundamental_form(const ImmersionJet2& jet,
                                              const MetricData& metric,
                                              const NormalFrame& frame) {
  const int n = jet.chart_dim();
  const int k = static_cast<int>(frame.basis.cols());
  SecondFundamentalForm sff;
  sff.normal_basis = frame.basis;
  sff.h_coeffs.assign(k, Matrix(n, n));
  for (int a = 0; a < k; ++a) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double v = 0.5 * (jet.d2[i].col(j).dot(frame.basis.col(a)) +
                                 jet.d2[j].col(i).dot(frame.basis.col(a)));
        sff.h_coeffs[a](i, j) = v;
        sff.h_coeffs[a](j, i) = v;
      }
    }
  }
  sff.mean_curvature = Vector::Zero(jet.ambient_dim());
  for (int a = 0; a < k; ++a) {
    const double trace = (metric.g_inv.cwiseProduct(sff.h_coeffs[a])).sum();
    sff.mean_curvature += (trace / n) * frame.basis.col(a);
  }
  return sff;
}

Matrix shape_operator(const SecondFundamentalForm& sff, const MetricData& metric,
                      const Vector& eta) {
  const Vector normal = sff.normal_basis * (sff.normal_basis.transpose() * eta);
  const double tangential = (eta - normal).norm();
  if (tangential > 1e-10 * std::max(1.0, eta.norm())) {
    throw GeometryError(ErrorKind::kPrecondition,
                        "shape operator: eta is not normal to the submanifold");
  }
  return metric.g_inv * sff.paired(eta);
}

CurvatureSummary riemann_via_gauss(const SecondFundamentalForm& sff,
                                   const MetricData& metric) {
  const int n = metric.dim();
  std::vector<Vector> h(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[i * n + j] = sff.ambient(i, j);
  auto H = [&](int i, int j) -> const Vector& { return h[i * n + j]; };

  CurvatureSummary cs;
  cs.riemann = Tensor4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          cs.riemann(i, j, k, l) = H(i, l).dot(H(j, k)) - H(i, k).dot(H(j, l));

  const Tensor4 framed = cs.riemann.transformed(metric.orthonormal_frame);
  cs.sectional = Matrix::Zero(n, n);
  cs.scalar = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      cs.sectional(a, b) = framed(a, b, b, a);
      cs.scalar += cs.sectional(a, b);
    }
  }

  cs.ricci = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) s += metric.g_inv(i, l) * cs.riemann(i, j, k, l);
      cs.ricci(j, k) = s;
    }
  cs.q_operator = metric.g_inv * cs.ricci;
  return cs;
}

WeylTensor weyl_tensor(const CurvatureSummary& curv, const MetricData& metric) {
  const int n = metric.dim();
  WeylTensor w;
  w.c = Tensor4(n);
  if (n < 4) {
    w.below_dimension_threshold = true;
    return w;
  }
  const Matrix& g = metric.g;
  const Matrix& ric = curv.ricci;
  const double a = 1.0 / (n - 2);
  const double b = curv.scalar / ((n - 1.0) * (n - 2.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double ricci_part = ric(i, l) * g(j, k) + ric(j, k) * g(i, l) -
                                    ric(i, k) * g(j, l) - ric(j, l) * g(i, k);
          const double metric_part = g(i, l) * g(j, k) - g(i, k) * g(j, l);
          w.c(i, j, k, l) = curv.riemann(i, j, k, l) - a * ricci_part + b * metric_part;
        }
  w.frobenius_norm = w.c.transformed(metric.orthonormal_frame).frobenius();
  return w;
}

double max_single_trace(const Tensor4& t, const MetricData& metric) {
  const int n = t.dim();
  const Tensor4 f = t.transformed(metric.orthonormal_frame);
  double worst = 0.0;
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      int free_slots[2];
      int c = 0;
      for (int s = 0; s < 4; ++s)
        if (s != p && s != q) free_slots[c++] = s;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          double s = 0.0;
          for (int a = 0; a < n; ++a) {
            int idx[4];
            idx[p] = a;
            idx[q] = a;
            idx[free_slots[0]] = x;
            idx[free_slots[1]] = y;
            s += f(idx[0], idx[1], idx[2], idx[3]);
          }
          worst = std::max(worst, std::abs(s));
        }
    }
  }
  return worst;
}

namespace {

Jet2 eval_scalar(const ScalarRule& f, const Vector& u) {
  const int n = static_cast<int>(u.size());
  std::vector<Jet2> chart;
  chart.reserve(n);
  for (int i = 0; i < n; ++i) chart.push_back(Jet2::variable(u[i], n, i));
  return f(chart);
}

}  // namespace

Matrix hessian_scalar(const ScalarRule& f, const Vector& u, const MetricData& metric) {
  const int n = metric.dim();
  const Jet2 v = eval_scalar(f, u);
  Matrix hess(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = v.d2(i, j);
      for (int k = 0; k < n; ++k) s -= metric.christoffel[k](i, j) * v.d(k);
      hess(i, j) = s;
    }
  }
  return 0.5 * (hess + hess.transpose());
}

Vector gradient_scalar(const ScalarRule& f, const Vector& u, const MetricData& metric) {
  const int n = metric.dim();
  const Jet2 v = eval_scalar(f, u);
  Vector df(n);
  for (int i = 0; i < n; ++i) df[i] = v.d(i);
  return metric.g_inv * df;
}

Vector tangent_coordinates(const ImmersionJet2& jet, const MetricData& metric,
                           const Vector& w) {
  return metric.g.llt().solve(jet.d1.transpose() * w);
}

Vector normal_part(const ImmersionJet2& jet, const MetricData& metric, const Vector& w) {
  return w - jet.d1 * tangent_coordinates(jet, metric, w);
}

NormalDerivative normal_connection_derivative(const Immersion& imm, const Vector& u,
                                              const Vector& dir,
                                              const AmbientField& eta_field,
                                              double step) {
  const ImmersionJet2 jet = evaluate_jet2(imm, u);
  const MetricData metric = induced_metric(jet);
  const Vector w = directional_derivative_field(eta_field, u, dir, step, imm.domain());
  NormalDerivative out;
  out.normal = normal_part(jet, metric, w);
  out.tangential = w - out.normal;
  return out;
}

}  // namespace yamabe
