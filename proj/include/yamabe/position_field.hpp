#pragma once

#include "yamabe/geometry.hpp"
#include "yamabe/immersion.hpp"
#include "yamabe/types.hpp"

namespace yamabe {

/// Tangential/normal decomposition of the position vector at one point.
struct PositionSplit {
  Vector xt_coords;   // chart components of x^T
  Vector xt_ambient;  // d1 * xt_coords
  Vector xn_ambient;  // x - x^T
  double xt_norm = 0;
  double xn_norm = 0;
};

/// x^T solves g a = d1^T x (Cholesky); x^N is the remainder.
PositionSplit split_position(const ImmersionJet2& jet, const MetricData& metric);

/// Chart matrix B of the covariant derivative of x^T, B(i, k) = (nabla_k x^T)^i,
/// from the exact derivative of the split plus Christoffel terms.
Matrix covariant_derivative_of_xt(const ImmersionJet2& jet, const MetricData& metric);

/// Exact ambient derivatives of x^N: column k is d_k x^N.
Matrix ambient_derivative_of_xn(const ImmersionJet2& jet, const MetricData& metric);

/// nabla_V x^T as a chart vector.
Vector tangent_covariant_derivative(const Immersion& imm, const Vector& u,
                                   const Vector& dir);

/// (L_{x^T} g)(V, W) = g(nabla_V x^T, W) + g(nabla_W x^T, V).
double lie_derivative_metric(const Immersion& imm, const Vector& u, const Vector& v,
                             const Vector& w);

/// Residual maxima of the structural identities of the position field at a
/// point, over the coordinate basis. Ambient norms throughout.
struct IdentityReport {
  double split_reconstruction = 0;  // |x^T + x^N - x|
  double concurrence_fd = 0;        // |FD d_V x - V|
  double tangent_derivative = 0;    // |nabla_V x^T - (A_{x^N} V + V)|
  double normal_derivative = 0;     // |h(V, x^T) + D_V x^N|, exact derivative
  double normal_derivative_fd = 0;  // same with D_V x^N by finite differences
  double lie_derivative = 0;        // |L g(V,W) - 2 g(V,W) - 2 <h(V,W), x^N>|

  double max_exact() const;
  double max_fd() const;
};

IdentityReport verify_structural_identities(const Immersion& imm, const Vector& u,
                                            double step = kDefaultFdStep);

}  // namespace yamabe
