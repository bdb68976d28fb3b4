#pragma once

#include <functional>
#include <span>
#include <vector>

#include "yamabe/immersion.hpp"
#include "yamabe/jet.hpp"
#include "yamabe/types.hpp"

namespace yamabe {

/// Dense rank-4 array over chart indices, row-major.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dim() const { return n_; }
  double& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const {
    return data_[index(i, j, k, l)];
  }
  /// Euclidean norm of the components (meaningful in an orthonormal frame).
  double frobenius() const;

  /// Components with every slot contracted against the columns of `frame`.
  Tensor4 transformed(const Matrix& frame) const;

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_ = 0;
  std::vector<double> data_;
};

struct MetricData {
  Matrix g;
  Matrix g_inv;
  double det_g = 0.0;
  std::vector<Matrix> christoffel;  // christoffel[k](i, j) = Gamma^k_ij
  /// g-orthonormal frame from Gram-Schmidt on the chart basis in index order;
  /// column a holds the chart components of e_a.
  Matrix orthonormal_frame;

  int dim() const { return static_cast<int>(g.rows()); }
  double inner(const Vector& v, const Vector& w) const { return v.dot(g * w); }
};

/// dg[k](i, j) = d_k g_ij, assembled from d1/d2 inner products.
std::vector<Matrix> metric_derivatives(const ImmersionJet2& jet);

/// Induced metric, inverse, determinant and Christoffel symbols from dg.
/// Throws kDegeneratePoint if d1 is (numerically) rank deficient.
MetricData induced_metric(const ImmersionJet2& jet);

/// g-orthonormalize `seeds` (chart vectors, as columns) in order, dropping
/// near-dependent ones, and complete with the chart basis up to n vectors.
Matrix g_orthonormal_frame(const Matrix& g, const Matrix& seeds);

struct NormalFrame {
  Matrix basis;  // m x (m - n), orthonormal columns normal to the tangent space
};

/// Modified Gram-Schmidt seeded by the ambient standard basis in index order.
NormalFrame normal_frame(const ImmersionJet2& jet);

struct SecondFundamentalForm {
  std::vector<Matrix> h_coeffs;  // per normal a: n x n, h^a_ij = <d_i d_j x, eta_a>
  Matrix normal_basis;           // copy of the frame used for h_coeffs
  Vector mean_curvature;         // ambient H = (1/n) g^ij h_ij

  int chart_dim() const { return h_coeffs.empty() ? 0 : static_cast<int>(h_coeffs[0].rows()); }
  int codim() const { return static_cast<int>(h_coeffs.size()); }
  /// Ambient normal vector h(d_i, d_j).
  Vector ambient(int i, int j) const;
  /// n x n matrix <h(d_i, d_j), eta> for an ambient vector eta.
  Matrix paired(const Vector& eta) const;
};

SecondFundamentalForm second_fundamental_form(const ImmersionJet2& jet,
                                              const MetricData& metric,
                                              const NormalFrame& frame);

/// Chart matrix of A_eta, i.e. g^{-1} <h, eta>. Rejects eta with a tangential
/// component above 1e-10 (relative to max(1, |eta|)).
Matrix shape_operator(const SecondFundamentalForm& sff, const MetricData& metric,
                      const Vector& eta);

struct CurvatureSummary {
  Tensor4 riemann;    // R_ijkl = g(R(d_i, d_j) d_k, d_l)
  Matrix sectional;   // K_ab over metric.orthonormal_frame, zero diagonal
  double scalar = 0;  // sum over ordered pairs a != b of K_ab
  Matrix ricci;       // Ric_jk = g^il R_ijkl
  Matrix q_operator;  // g^{-1} Ric
};

/// Intrinsic curvature from the Gauss equation; no third derivatives.
CurvatureSummary riemann_via_gauss(const SecondFundamentalForm& sff,
                                   const MetricData& metric);

struct WeylTensor {
  Tensor4 c;                   // covariant components, same slot order as riemann
  double frobenius_norm = 0;   // taken in a g-orthonormal frame
  bool below_dimension_threshold = false;  // n < 4: c is zero by convention
};

WeylTensor weyl_tensor(const CurvatureSummary& curv, const MetricData& metric);

/// Largest component over all six single g-contractions of a rank-4 tensor,
/// measured in an orthonormal frame.
double max_single_trace(const Tensor4& t, const MetricData& metric);

using ScalarRule = std::function<Jet2(std::span<const Jet2>)>;

/// Riemannian Hessian d_i d_j f - Gamma^k_ij d_k f.
Matrix hessian_scalar(const ScalarRule& f, const Vector& u, const MetricData& metric);

/// Gradient of f as a chart vector, g^{-1} df.
Vector gradient_scalar(const ScalarRule& f, const Vector& u, const MetricData& metric);

/// Chart components a with d1 * a equal to the tangential part of w.
Vector tangent_coordinates(const ImmersionJet2& jet, const MetricData& metric,
                           const Vector& w);

/// Normal projection of an ambient vector.
Vector normal_part(const ImmersionJet2& jet, const MetricData& metric, const Vector& w);

struct NormalDerivative {
  Vector normal;      // D_V eta
  Vector tangential;  // -A_eta V as an ambient vector
};

/// Splits the ambient derivative of a normal field along V into its normal
/// connection part and its tangential part (finite differences).
NormalDerivative normal_connection_derivative(const Immersion& imm, const Vector& u,
                                              const Vector& dir,
                                              const AmbientField& eta_field,
                                              double step = kDefaultFdStep);

}  // namespace yamabe
