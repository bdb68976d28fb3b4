#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "yamabe/geometry.hpp"
#include "yamabe/immersion.hpp"
#include "yamabe/position_field.hpp"

namespace yamabe {

/// Residual tolerances for exact (jet) and finite-difference quantities.
struct Tolerances {
  double exact = 1e-7;
  double fd = 1e-4;
};

/// A field is treated as identically zero on a sample set when its largest
/// norm is below this factor times (1 + max |x|).
inline constexpr double kZeroFieldFactor = 1e-9;
/// Points where |x^T| is below this are skipped by mu and torse-forming fits.
inline constexpr double kVanishingSolitonField = 1e-9;

struct SamplePoint {
  Vector u;
  ImmersionJet2 jet;
  MetricData metric;
  NormalFrame frame;
  SecondFundamentalForm sff;
  CurvatureSummary curvature;
  PositionSplit split;
};

struct SampleSet {
  std::shared_ptr<const Immersion> immersion;
  std::vector<SamplePoint> points;

  int chart_dim() const { return immersion->chart_dim(); }
  int codim() const { return immersion->ambient_dim() - immersion->chart_dim(); }
  /// max over points of |x|
  double position_scale() const;
};

/// Evaluates the full pointwise geometry. Requires at least 2n + 2 points,
/// all regular.
SampleSet make_sample_set(std::shared_ptr<const Immersion> immersion,
                          const std::vector<Vector>& points);

enum class SolitonVerdict { kYamabe, kQuasiYamabe, kNotASoliton };
enum class SolitonSign { kShrinking, kSteady, kExpanding };

const char* to_string(SolitonVerdict v);
const char* to_string(SolitonSign s);

struct SolitonFit {
  double lambda = 0;         // mean of per-point lambda
  double lambda_stddev = 0;  // population standard deviation
  double lambda_spread = 0;  // max - min
  std::vector<std::optional<double>> lambda_per_point;
  std::vector<std::optional<double>> mu_values;  // quasi fit only
  double max_residual = 0;
  int fitted_points = 0;
  bool underdetermined = false;  // quasi fit with n = 1
  SolitonVerdict verdict = SolitonVerdict::kNotASoliton;
  std::optional<SolitonSign> soliton_sign;  // set when verdict is a soliton
};

/// Yamabe criterion with x^T as soliton field:
///   <h(V, W), x^N> = (R - lambda - 1) g(V, W).
/// lambda_p comes from the g-trace; the residual is the trace-free part in an
/// orthonormal frame. Verdict yamabe iff residual and lambda stddev < tol.
SolitonFit yamabe_fit(const SampleSet& s, double tol);

/// Quasi-Yamabe criterion
///   <h(V, W), x^N> = (R - lambda - 1) g(V, W) + mu g(x^T, V) g(x^T, W).
/// Per point, lambda_p from directions orthogonal to x^T and mu_p from the
/// x^T direction. Throws kUndefined if x^T vanishes at every point.
SolitonFit quasi_yamabe_fit(const SampleSet& s, double tol);

SolitonSign sign_of(double lambda, double tol);

enum class PositionType { kConic, kSpherical, kProper };
const char* to_string(PositionType p);

/// conic if x^N vanishes set-wide, spherical if x^T does, else proper.
PositionType classify_position_type(const SampleSet& s);

enum class HypersurfaceClass { kHyperplane, kOriginCenteredSphere, kOther, kNotApplicable };
const char* to_string(HypersurfaceClass c);

struct HypersurfaceClassification {
  HypersurfaceClass cls = HypersurfaceClass::kNotApplicable;
  /// Set when the data contradicts the hyperplane/sphere dichotomy for
  /// Yamabe hypersurfaces: class other, or lambda inconsistent with the class.
  bool theorem_violation = false;
  std::string detail;
};

/// Requires codimension 1. not_applicable unless fit.verdict is yamabe.
HypersurfaceClassification classify_yamabe_hypersurface(const SampleSet& s,
                                                        const SolitonFit& fit,
                                                        double tol = Tolerances{}.exact);

struct QuasiUmbilicalReport {
  bool quasi_umbilical = false;
  /// min over points of |cos| between the distinguished principal direction
  /// and x^T; empty when no point has a distinguished direction.
  std::optional<double> alignment;
  /// Fit of A_{x^N} V = (phi - 1) V + alpha(V) x^T at points with x^T != 0.
  std::vector<std::optional<double>> phi;
  double shape_fit_residual = 0;
};

/// Requires codimension 1.
QuasiUmbilicalReport quasi_umbilical_check(const SampleSet& s, double tol);

enum class TorseVerdict { kProperTorseForming, kConcircular, kTorseForming, kNotTorseForming };
const char* to_string(TorseVerdict v);

struct TorseFormingFit {
  TorseVerdict verdict = TorseVerdict::kNotTorseForming;
  std::vector<std::optional<double>> phi;
  std::vector<std::optional<double>> alpha_norm;  // g-norm of the generating form
  double max_residual = 0;
  double nonzero_alpha_fraction = 0;
  int fitted_points = 0;
};

/// Least-squares fit of nabla_V x^T = phi V + alpha(V) x^T per point.
/// Throws kUndefined if x^T vanishes at every point.
TorseFormingFit torse_forming_fit(const SampleSet& s, double tol);

enum class NormalSection { kParallel, kNonparallel, kNotApplicable };
const char* to_string(NormalSection n);

struct NormalSectionReport {
  NormalSection verdict = NormalSection::kNotApplicable;
  double max_derivative = 0;  // max |D_V xi| over unit V and points
};

/// Parallelism of xi = x^N / |x^N| under the normal connection.
/// not_applicable in codimension 1. Throws kPrecondition if x^N vanishes at a
/// sample point, kIndeterminate when the maximum lies in (tol, 10 tol].
NormalSectionReport normal_section_parallelism(const SampleSet& s, double tol,
                                               double step = kDefaultFdStep);

enum class ConformalFlatness { kFlat, kNotFlat, kNotApplicable };
const char* to_string(ConformalFlatness c);

struct ConformalFlatnessReport {
  ConformalFlatness verdict = ConformalFlatness::kNotApplicable;
  double max_weyl_norm = 0;
};

/// Weyl norm below tol at every point; not_applicable for n < 4.
ConformalFlatnessReport conformal_flatness_check(const SampleSet& s, double tol);

}  // namespace yamabe
