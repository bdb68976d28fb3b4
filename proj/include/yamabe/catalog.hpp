#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "yamabe/immersion.hpp"
#include "yamabe/soliton_lab.hpp"

namespace yamabe {

enum class SurfaceKind {
  kHyperplane,
  kSphere,
  kCylinder,
  kCone,
  kRotational,
  kCliffordTorus,
  kSphericalCurve,
};

/// Profile g(u) of a rotational hypersurface x = (g(u) y, u), y in S^{n-1}.
enum class Profile {
  kConstant,  // g = c
  kLinear,    // g = c u
  kCatenary,  // g = cosh u
  kParabola,  // g = 1 + u^2
};

const char* to_string(SurfaceKind k);
const char* to_string(Profile p);
std::optional<SurfaceKind> parse_surface_kind(const std::string& s);
std::optional<Profile> parse_profile(const std::string& s);

/// Only the fields relevant to `kind` are read:
///   hyperplane      n, offset          (u_1..u_n, offset)
///   sphere          n, r, center       r y + center
///   cylinder        r                  (r cos phi, r sin phi, z)
///   cone            slope              (slope u cos phi, slope u sin phi, u)
///   rotational      n, profile, c      (g(u) y, u)
///   clifford_torus  r                  (r / sqrt 2)(cos s, sin s, cos t, sin t)
///   spherical_curve r, theta0, amplitude, frequency
///                   r (sin th cos t, sin th sin t, cos th), th = theta0 + amplitude sin(frequency t)
struct SurfaceSpec {
  std::string name;
  SurfaceKind kind = SurfaceKind::kSphere;
  int n = 2;
  double r = 1.0;
  Vector center;  // empty means the origin
  double offset = 0.0;
  double slope = 1.0;
  Profile profile = Profile::kConstant;
  double c = 1.0;
  double theta0 = 1.0471975511965976;  // pi / 3
  double amplitude = 0.3;
  int frequency = 3;
};

/// Throws kInvalidArgument on invalid parameters.
void validate(const SurfaceSpec& spec);

Immersion make_surface(const SurfaceSpec& spec);

/// Human-readable formula with parameters substituted.
std::string describe(const SurfaceSpec& spec);

using PointFunction = std::function<double(const Vector& u)>;

enum class QuasiOutcome { kSoliton, kNotASoliton, kUndefined, kUnderdetermined };
const char* to_string(QuasiOutcome q);

struct Expectation {
  PositionType position_type = PositionType::kProper;

  SolitonVerdict yamabe_verdict = SolitonVerdict::kNotASoliton;
  std::optional<double> yamabe_lambda;
  std::optional<SolitonSign> yamabe_sign;

  QuasiOutcome quasi = QuasiOutcome::kNotASoliton;
  std::optional<double> quasi_lambda;
  PointFunction quasi_mu;  // empty unless quasi is kSoliton

  HypersurfaceClass hypersurface_class = HypersurfaceClass::kNotApplicable;
  bool theorem_violation = false;

  std::optional<bool> quasi_umbilical;  // empty off codimension 1
  bool distinguished_direction = false;  // principal direction along x^T expected

  std::optional<TorseVerdict> torse;  // empty when x^T vanishes identically

  NormalSection normal_section = NormalSection::kNotApplicable;
  ConformalFlatness conformal = ConformalFlatness::kNotApplicable;

  PointFunction scalar_curvature;

  /// One line per expectation explaining where the value comes from.
  std::vector<std::string> basis;
};

Expectation expected(const SurfaceSpec& spec);

/// Default entries, in a fixed order.
const std::vector<SurfaceSpec>& catalog();
std::optional<SurfaceSpec> find_catalog_entry(const std::string& name);

/// Multi-line text: formula, chart domain, expectations and their basis.
std::string explain(const SurfaceSpec& spec);

}  // namespace yamabe
