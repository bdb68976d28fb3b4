#include "yamabe/position_field.hpp"

#include <algorithm>
#include <cmath>

namespace yamabe {

namespace {

// d_k a for the chart components a of x^T; column k.
Matrix xt_coordinate_derivatives(const ImmersionJet2& jet, const MetricData& metric,
                                 const Vector& a) {
  const int n = jet.chart_dim();
  const std::vector<Matrix> dg = metric_derivatives(jet);
  const Eigen::LLT<Matrix> llt(metric.g);
  Matrix da(n, n);
  for (int k = 0; k < n; ++k) {
    // b = d1^T x, so d_k b_i = <d_k d_i x, x> + g_ik
    const Vector db = jet.d2[k].transpose() * jet.value + metric.g.col(k);
    da.col(k) = llt.solve(db - dg[k] * a);
  }
  return da;
}

}  // namespace

PositionSplit split_position(const ImmersionJet2& jet, const MetricData& metric) {
  PositionSplit s;
  s.xt_coords = tangent_coordinates(jet, metric, jet.value);
  s.xt_ambient = jet.d1 * s.xt_coords;
  s.xn_ambient = jet.value - s.xt_ambient;
  s.xt_norm = s.xt_ambient.norm();
  s.xn_norm = s.xn_ambient.norm();
  return s;
}

Matrix covariant_derivative_of_xt(const ImmersionJet2& jet, const MetricData& metric) {
  const int n = jet.chart_dim();
  const Vector a = tangent_coordinates(jet, metric, jet.value);
  Matrix b = xt_coordinate_derivatives(jet, metric, a);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += metric.christoffel[i](k, j) * a[j];
      b(i, k) += s;
    }
  }
  return b;
}

Matrix ambient_derivative_of_xn(const ImmersionJet2& jet, const MetricData& metric) {
  const int n = jet.chart_dim();
  const Vector a = tangent_coordinates(jet, metric, jet.value);
  const Matrix da = xt_coordinate_derivatives(jet, metric, a);
  Matrix out(jet.ambient_dim(), n);
  for (int k = 0; k < n; ++k) {
    out.col(k) = jet.d1.col(k) - jet.d2[k] * a - jet.d1 * da.col(k);
  }
  return out;
}

Vector tangent_covariant_derivative(const Immersion& imm, const Vector& u,
                                   const Vector& dir) {
  const ImmersionJet2 jet = evaluate_jet2(imm, u);
  const MetricData metric = induced_metric(jet);
  return covariant_derivative_of_xt(jet, metric) * dir;
}

double lie_derivative_metric(const Immersion& imm, const Vector& u, const Vector& v,
                             const Vector& w) {
  const ImmersionJet2 jet = evaluate_jet2(imm, u);
  const MetricData metric = induced_metric(jet);
  const Matrix b = covariant_derivative_of_xt(jet, metric);
  return metric.inner(b * v, w) + metric.inner(b * w, v);
}

double IdentityReport::max_exact() const {
  return std::max({split_reconstruction, tangent_derivative, normal_derivative,
                   lie_derivative});
}

double IdentityReport::max_fd() const {
  return std::max(concurrence_fd, normal_derivative_fd);
}

IdentityReport verify_structural_identities(const Immersion& imm, const Vector& u,
                                            double step) {
  const int n = imm.chart_dim();
  const ImmersionJet2 jet = evaluate_jet2(imm, u);
  const MetricData metric = induced_metric(jet);
  const SecondFundamentalForm sff = second_fundamental_form(jet, metric, normal_frame(jet));
  const PositionSplit split = split_position(jet, metric);
  const Matrix shape = shape_operator(sff, metric, split.xn_ambient);
  const Matrix nabla_xt = covariant_derivative_of_xt(jet, metric);
  const Matrix dxn = ambient_derivative_of_xn(jet, metric);

  const AmbientField position = [&](const Vector& p) { return imm.position(p); };
  const AmbientField xn_field = [&](const Vector& p) {
    const ImmersionJet2 j = evaluate_jet2(imm, p);
    return split_position(j, induced_metric(j)).xn_ambient;
  };

  IdentityReport r;
  r.split_reconstruction =
      (split.xt_ambient + split.xn_ambient - jet.value).cwiseAbs().maxCoeff();
  for (int k = 0; k < n; ++k) {
    const Vector e = Vector::Unit(n, k);

    const Vector dx = directional_derivative_field(position, u, e, step, imm.domain());
    r.concurrence_fd = std::max(r.concurrence_fd, (dx - jet.d1.col(k)).norm());

    const Vector expected = shape * e + e;
    r.tangent_derivative =
        std::max(r.tangent_derivative, (jet.d1 * (nabla_xt.col(k) - expected)).norm());

    Vector h_xt = Vector::Zero(jet.ambient_dim());
    for (int j = 0; j < n; ++j) h_xt += split.xt_coords[j] * sff.ambient(k, j);
    const Vector d_xn = normal_part(jet, metric, dxn.col(k));
    r.normal_derivative = std::max(r.normal_derivative, (h_xt + d_xn).norm());

    const Vector dxn_fd = directional_derivative_field(xn_field, u, e, step, imm.domain());
    r.normal_derivative_fd = std::max(r.normal_derivative_fd,
                                      (h_xt + normal_part(jet, metric, dxn_fd)).norm());

    for (int l = 0; l < n; ++l) {
      const Vector f = Vector::Unit(n, l);
      const double lie = metric.inner(nabla_xt * e, f) + metric.inner(nabla_xt * f, e);
      const double rhs = 2.0 * metric.g(k, l) + 2.0 * sff.ambient(k, l).dot(split.xn_ambient);
      r.lie_derivative = std::max(r.lie_derivative, std::abs(lie - rhs));
    }
  }
  return r;
}

}  // namespace yamabe
