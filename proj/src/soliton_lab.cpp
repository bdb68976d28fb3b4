#include "yamabe/soliton_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "yamabe/errors.hpp"

namespace yamabe {

namespace {

constexpr double kEigenGapFactor = 1e-6;
constexpr double kProperFraction = 0.9;

struct Stats {
  double mean = 0, stddev = 0, spread = 0;
};

Stats stats_of(const std::vector<std::optional<double>>& values) {
  Stats s;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  int count = 0;
  for (const auto& v : values) {
    if (!v) continue;
    s.mean += *v;
    lo = std::min(lo, *v);
    hi = std::max(hi, *v);
    ++count;
  }
  if (count == 0) return s;
  s.mean /= count;
  double var = 0.0;
  for (const auto& v : values)
    if (v) var += (*v - s.mean) * (*v - s.mean);
  s.stddev = std::sqrt(var / count);
  s.spread = hi - lo;
  return s;
}

// Bilinear form in the orthonormal frame E.
Matrix in_frame(const Matrix& bilinear, const Matrix& frame) {
  return frame.transpose() * bilinear * frame;
}

// Frame adapted to x^T: first column is x^T / |x^T|.
Matrix adapted_frame(const SamplePoint& p) {
  return g_orthonormal_frame(p.metric.g, p.split.xt_coords);
}

struct TorseForm {
  double phi = 0;
  Vector alpha;  // components in the adapted orthonormal frame
  double residual = 0;
};

// Least squares for op = phi I + t alpha^T with t = (|x^T|, 0, ..., 0), the
// operator given in the adapted orthonormal frame.
TorseForm fit_torse_form(const Matrix& op, double xt_norm) {
  const int n = static_cast<int>(op.rows());
  Matrix design = Matrix::Zero(n * n, n + 1);
  Vector rhs(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int row = a * n + b;
      design(row, 0) = (a == b) ? 1.0 : 0.0;
      if (a == 0) design(row, 1 + b) = xt_norm;
      rhs[row] = op(a, b);
    }
  }
  const Vector sol = design.completeOrthogonalDecomposition().solve(rhs);
  TorseForm out;
  out.phi = sol[0];
  out.alpha = sol.tail(n);
  out.residual = (design * sol - rhs).cwiseAbs().maxCoeff();
  return out;
}

double zero_threshold(const SampleSet& s) {
  return kZeroFieldFactor * (1.0 + s.position_scale());
}

}  // namespace

const char* to_string(SolitonVerdict v) {
  switch (v) {
    case SolitonVerdict::kYamabe: return "yamabe";
    case SolitonVerdict::kQuasiYamabe: return "quasi_yamabe";
    case SolitonVerdict::kNotASoliton: return "not_a_soliton";
  }
  return "?";
}

const char* to_string(SolitonSign s) {
  switch (s) {
    case SolitonSign::kShrinking: return "shrinking";
    case SolitonSign::kSteady: return "steady";
    case SolitonSign::kExpanding: return "expanding";
  }
  return "?";
}

const char* to_string(PositionType p) {
  switch (p) {
    case PositionType::kConic: return "conic";
    case PositionType::kSpherical: return "spherical";
    case PositionType::kProper: return "proper";
  }
  return "?";
}

const char* to_string(HypersurfaceClass c) {
  switch (c) {
    case HypersurfaceClass::kHyperplane: return "hyperplane";
    case HypersurfaceClass::kOriginCenteredSphere: return "origin_centered_sphere";
    case HypersurfaceClass::kOther: return "other";
    case HypersurfaceClass::kNotApplicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(TorseVerdict v) {
  switch (v) {
    case TorseVerdict::kProperTorseForming: return "proper_torse_forming";
    case TorseVerdict::kConcircular: return "concircular";
    case TorseVerdict::kTorseForming: return "torse_forming";
    case TorseVerdict::kNotTorseForming: return "not_torse_forming";
  }
  return "?";
}

const char* to_string(NormalSection n) {
  switch (n) {
    case NormalSection::kParallel: return "parallel";
    case NormalSection::kNonparallel: return "nonparallel";
    case NormalSection::kNotApplicable: return "not_applicable";
  }
  return "?";
}

const char* to_string(ConformalFlatness c) {
  switch (c) {
    case ConformalFlatness::kFlat: return "conformally_flat";
    case ConformalFlatness::kNotFlat: return "not_conformally_flat";
    case ConformalFlatness::kNotApplicable: return "not_applicable";
  }
  return "?";
}

double SampleSet::position_scale() const {
  double m = 0.0;
  for (const SamplePoint& p : points) m = std::max(m, p.jet.value.norm());
  return m;
}

SampleSet make_sample_set(std::shared_ptr<const Immersion> immersion,
                          const std::vector<Vector>& points) {
  if (!immersion) {
    throw GeometryError(ErrorKind::kInvalidArgument, "sample set needs an immersion");
  }
  const int n = immersion->chart_dim();
  if (static_cast<int>(points.size()) < 2 * n + 2) {
    throw GeometryError(ErrorKind::kPrecondition,
                        "sample set needs at least 2n + 2 points, got " +
                            std::to_string(points.size()));
  }
  SampleSet s;
  s.immersion = std::move(immersion);
  s.points.reserve(points.size());
  for (const Vector& u : points) {
    SamplePoint p;
    p.u = u;
    p.jet = evaluate_jet2(*s.immersion, u);
    p.metric = induced_metric(p.jet);
    p.frame = normal_frame(p.jet);
    p.sff = second_fundamental_form(p.jet, p.metric, p.frame);
    p.curvature = riemann_via_gauss(p.sff, p.metric);
    p.split = split_position(p.jet, p.metric);
    s.points.push_back(std::move(p));
  }
  return s;
}

SolitonSign sign_of(double lambda, double tol) {
  if (lambda > tol) return SolitonSign::kShrinking;
  if (lambda < -tol) return SolitonSign::kExpanding;
  return SolitonSign::kSteady;
}

SolitonFit yamabe_fit(const SampleSet& s, double tol) {
  if (s.points.empty()) {
    throw GeometryError(ErrorKind::kPrecondition, "yamabe fit: empty sample set");
  }
  const int n = s.chart_dim();
  SolitonFit fit;
  for (const SamplePoint& p : s.points) {
    const Matrix form = in_frame(p.sff.paired(p.split.xn_ambient), p.metric.orthonormal_frame);
    const double c = form.trace() / n;
    fit.lambda_per_point.push_back(p.curvature.scalar - 1.0 - c);
    const double residual = (form - c * Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    fit.max_residual = std::max(fit.max_residual, residual);
  }
  const Stats st = stats_of(fit.lambda_per_point);
  fit.lambda = st.mean;
  fit.lambda_stddev = st.stddev;
  fit.lambda_spread = st.spread;
  fit.fitted_points = static_cast<int>(s.points.size());
  if (fit.max_residual < tol && fit.lambda_stddev < tol) {
    fit.verdict = SolitonVerdict::kYamabe;
    fit.soliton_sign = sign_of(fit.lambda, tol);
  }
  return fit;
}

SolitonFit quasi_yamabe_fit(const SampleSet& s, double tol) {
  const int n = s.chart_dim();
  SolitonFit fit;
  fit.lambda_per_point.assign(s.points.size(), std::nullopt);
  fit.mu_values.assign(s.points.size(), std::nullopt);
  const bool any_field = std::any_of(s.points.begin(), s.points.end(), [](const SamplePoint& p) {
    return p.split.xt_norm >= kVanishingSolitonField;
  });
  if (!any_field) {
    throw GeometryError(ErrorKind::kUndefined, "soliton field vanishes; quasi fit undefined");
  }
  if (n == 1) {
    // No direction orthogonal to x^T: lambda and mu cannot be separated.
    fit.underdetermined = true;
    fit.lambda = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const SamplePoint& p = s.points[k];
    if (p.split.xt_norm < kVanishingSolitonField) continue;
    const Matrix form = in_frame(p.sff.paired(p.split.xn_ambient), adapted_frame(p));
    const double c = form.diagonal().tail(n - 1).mean();
    const double t2 = p.split.xt_norm * p.split.xt_norm;
    const double mu = (form(0, 0) - c) / t2;
    Matrix model = c * Matrix::Identity(n, n);
    model(0, 0) += mu * t2;
    fit.lambda_per_point[k] = p.curvature.scalar - 1.0 - c;
    fit.mu_values[k] = mu;
    fit.max_residual = std::max(fit.max_residual, (form - model).cwiseAbs().maxCoeff());
    ++fit.fitted_points;
  }
  const Stats st = stats_of(fit.lambda_per_point);
  fit.lambda = st.mean;
  fit.lambda_stddev = st.stddev;
  fit.lambda_spread = st.spread;
  if (fit.max_residual < tol && fit.lambda_stddev < tol) {
    fit.verdict = SolitonVerdict::kQuasiYamabe;
    fit.soliton_sign = sign_of(fit.lambda, tol);
  }
  return fit;
}

PositionType classify_position_type(const SampleSet& s) {
  const double threshold = zero_threshold(s);
  double max_xn = 0.0, max_xt = 0.0;
  for (const SamplePoint& p : s.points) {
    max_xn = std::max(max_xn, p.split.xn_norm);
    max_xt = std::max(max_xt, p.split.xt_norm);
  }
  if (max_xn < threshold) return PositionType::kConic;
  if (max_xt < threshold) return PositionType::kSpherical;
  return PositionType::kProper;
}

HypersurfaceClassification classify_yamabe_hypersurface(const SampleSet& s,
                                                        const SolitonFit& fit, double tol) {
  if (s.codim() != 1) {
    throw GeometryError(ErrorKind::kPrecondition,
                        "hypersurface classification needs codimension 1");
  }
  HypersurfaceClassification out;
  if (fit.verdict != SolitonVerdict::kYamabe) {
    out.detail = "sample set is not a Yamabe soliton";
    return out;
  }
  const int n = s.chart_dim();
  double max_h = 0.0;
  double max_sphere_dev = 0.0;
  double mean_r = 0.0;
  for (const SamplePoint& p : s.points) {
    const Matrix& e = p.metric.orthonormal_frame;
    const Vector x = p.jet.value;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        Vector hab = Vector::Zero(x.size());
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) hab += e(i, a) * e(j, b) * p.sff.ambient(i, j);
        max_h = std::max(max_h, hab.norm());
        const Vector umbilic = (a == b) ? Vector(-x / x.squaredNorm()) : Vector::Zero(x.size());
        max_sphere_dev = std::max(max_sphere_dev, (hab - umbilic).norm());
      }
    }
    mean_r += p.curvature.scalar;
  }
  mean_r /= static_cast<double>(s.points.size());

  if (max_h < tol) {
    out.cls = HypersurfaceClass::kHyperplane;
    if (std::abs(fit.lambda + 1.0) > tol) {
      out.theorem_violation = true;
      out.detail = "totally geodesic but lambda != -1";
    }
    return out;
  }
  if (classify_position_type(s) == PositionType::kSpherical && max_sphere_dev < tol) {
    out.cls = HypersurfaceClass::kOriginCenteredSphere;
    if (std::abs(fit.lambda - mean_r) > tol || !(fit.lambda > 0.0)) {
      out.theorem_violation = true;
      out.detail = "origin-centered sphere but lambda != R > 0";
    }
    return out;
  }
  out.cls = HypersurfaceClass::kOther;
  out.theorem_violation = true;
  out.detail = classify_position_type(s) == PositionType::kConic
                   ? "Yamabe hypersurface with x^N = 0 that is not totally geodesic (cone)"
                   : "Yamabe hypersurface that is neither a hyperplane nor an origin-centered sphere";
  return out;
}

QuasiUmbilicalReport quasi_umbilical_check(const SampleSet& s, double tol) {
  if (s.codim() != 1) {
    throw GeometryError(ErrorKind::kPrecondition, "quasi-umbilical check needs codimension 1");
  }
  const int n = s.chart_dim();
  QuasiUmbilicalReport out;
  out.quasi_umbilical = true;
  out.phi.assign(s.points.size(), std::nullopt);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const SamplePoint& p = s.points[k];
    const Matrix& e = p.metric.orthonormal_frame;
    const Matrix shape = in_frame(p.sff.paired(p.split.xn_ambient), e);
    Eigen::SelfAdjointEigenSolver<Matrix> es(shape);
    const Vector& ev = es.eigenvalues();
    const double radius = ev.cwiseAbs().maxCoeff();
    const double gap = std::max(kEigenGapFactor * radius, tol);
    const bool has_xt = p.split.xt_norm >= kVanishingSolitonField;
    Vector xt_frame = e.transpose() * p.metric.g * p.split.xt_coords;
    if (has_xt) xt_frame.normalize();

    std::optional<double> alignment;
    if (n >= 2) {
      const bool low_cluster = ev[n - 2] - ev[0] <= gap;
      const bool high_cluster = ev[n - 1] - ev[1] <= gap;
      if (ev[n - 1] - ev[0] <= gap) {
        // umbilical point: no distinguished direction
      } else if (n == 2) {
        if (has_xt) {
          alignment = std::max(std::abs(es.eigenvectors().col(0).dot(xt_frame)),
                               std::abs(es.eigenvectors().col(1).dot(xt_frame)));
        }
      } else if (low_cluster || high_cluster) {
        const int simple = low_cluster ? n - 1 : 0;
        if (has_xt) alignment = std::abs(es.eigenvectors().col(simple).dot(xt_frame));
      } else {
        out.quasi_umbilical = false;
      }
    }
    if (alignment) out.alignment = std::min(out.alignment.value_or(1.0), *alignment);

    if (has_xt) {
      const Matrix op = in_frame(p.sff.paired(p.split.xn_ambient), adapted_frame(p)) +
                        Matrix::Identity(n, n);
      const TorseForm tf = fit_torse_form(op, p.split.xt_norm);
      out.phi[k] = tf.phi;
      out.shape_fit_residual = std::max(out.shape_fit_residual, tf.residual);
    }
  }
  return out;
}

TorseFormingFit torse_forming_fit(const SampleSet& s, double tol) {
  const int n = s.chart_dim();
  TorseFormingFit out;
  out.phi.assign(s.points.size(), std::nullopt);
  out.alpha_norm.assign(s.points.size(), std::nullopt);
  int nonzero_alpha = 0;
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const SamplePoint& p = s.points[k];
    if (p.split.xt_norm < kVanishingSolitonField) continue;
    const Matrix frame = adapted_frame(p);
    const Matrix nabla = covariant_derivative_of_xt(p.jet, p.metric);
    const Matrix op = frame.transpose() * p.metric.g * nabla * frame;
    const TorseForm tf = fit_torse_form(op, p.split.xt_norm);
    out.phi[k] = tf.phi;
    out.alpha_norm[k] = tf.alpha.norm();
    out.max_residual = std::max(out.max_residual, tf.residual);
    if (tf.alpha.norm() > tol) ++nonzero_alpha;
    ++out.fitted_points;
  }
  if (out.fitted_points == 0) {
    throw GeometryError(ErrorKind::kUndefined,
                        "soliton field vanishes; torse-forming fit undefined");
  }
  (void)n;
  out.nonzero_alpha_fraction = static_cast<double>(nonzero_alpha) / out.fitted_points;
  if (out.max_residual >= tol) {
    out.verdict = TorseVerdict::kNotTorseForming;
  } else if (nonzero_alpha == 0) {
    out.verdict = TorseVerdict::kConcircular;
  } else if (out.nonzero_alpha_fraction > kProperFraction) {
    out.verdict = TorseVerdict::kProperTorseForming;
  } else {
    out.verdict = TorseVerdict::kTorseForming;
  }
  return out;
}

NormalSectionReport normal_section_parallelism(const SampleSet& s, double tol, double step) {
  NormalSectionReport out;
  if (s.codim() == 1) return out;
  const double threshold = zero_threshold(s);
  const Immersion& imm = *s.immersion;
  const AmbientField unit_xn = [&imm](const Vector& p) {
    const ImmersionJet2 jet = evaluate_jet2(imm, p);
    const Vector xn = split_position(jet, induced_metric(jet)).xn_ambient;
    return Vector(xn / xn.norm());
  };
  for (const SamplePoint& p : s.points) {
    if (p.split.xn_norm < threshold) {
      throw GeometryError(ErrorKind::kPrecondition,
                          "normal section undefined: x^N vanishes at a sample point");
    }
    for (int a = 0; a < s.chart_dim(); ++a) {
      const NormalDerivative d = normal_connection_derivative(
          imm, p.u, p.metric.orthonormal_frame.col(a), unit_xn, step);
      out.max_derivative = std::max(out.max_derivative, d.normal.norm());
    }
  }
  if (out.max_derivative < tol) {
    out.verdict = NormalSection::kParallel;
  } else if (out.max_derivative > 10.0 * tol) {
    out.verdict = NormalSection::kNonparallel;
  } else {
    throw GeometryError(ErrorKind::kIndeterminate,
                        "normal section parallelism indeterminate: max |D xi| = " +
                            std::to_string(out.max_derivative));
  }
  return out;
}

ConformalFlatnessReport conformal_flatness_check(const SampleSet& s, double tol) {
  ConformalFlatnessReport out;
  if (s.chart_dim() < 4) return out;
  for (const SamplePoint& p : s.points) {
    out.max_weyl_norm =
        std::max(out.max_weyl_norm, weyl_tensor(p.curvature, p.metric).frobenius_norm);
  }
  out.verdict = out.max_weyl_norm < tol ? ConformalFlatness::kFlat : ConformalFlatness::kNotFlat;
  return out;
}

}  // namespace yamabe
