#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "test_surfaces.hpp"
#include "yamabe/catalog.hpp"
#include "yamabe/errors.hpp"
#include "yamabe/sampling.hpp"

namespace yamabe {
namespace {

using testing::kPi;
using testing::vec;

SurfaceSpec spec_of(SurfaceKind kind) {
  SurfaceSpec s;
  s.name = "test";
  s.kind = kind;
  return s;
}

SampleSet sample(const SurfaceSpec& spec, int resolution = 4, int random = 40) {
  auto imm = std::make_shared<const Immersion>(make_surface(spec));
  return make_sample_set(imm, sample_points(imm->domain(), resolution, random, 11));
}

TEST(MakeSurface, UnitSphereMatchesSphericalCoordinates) {
  const Immersion s = make_surface(*find_catalog_entry("sphere_unit"));
  const Immersion ref = testing::sphere2();
  EXPECT_EQ(s.chart_dim(), 2);
  EXPECT_EQ(s.ambient_dim(), 3);
  for (const Vector& u : testing::random_points(s.domain(), 10, 1)) {
    EXPECT_LT((s.position(u) - ref.position(u)).norm(), 1e-15);
  }
  EXPECT_NEAR(s.domain().lower[0], 0.1, 0.0);
  EXPECT_NEAR(s.domain().upper[0], kPi - 0.1, 0.0);
}

TEST(MakeSurface, RoundSphereChartMatchesTestChart) {
  SurfaceSpec s = spec_of(SurfaceKind::kSphere);
  s.n = 4;
  s.r = 0.7;
  const Immersion a = make_surface(s);
  const Immersion b = testing::round_sphere(4, 0.7);
  for (const Vector& u : testing::random_points(a.domain(), 10, 2)) {
    EXPECT_LT((a.position(u) - b.position(u)).norm(), 1e-15);
  }
}

TEST(MakeSurface, ConstantProfileIsASphericalCylinder) {
  SurfaceSpec s = spec_of(SurfaceKind::kRotational);
  s.n = 3;
  s.profile = Profile::kConstant;
  s.c = 1.5;
  const Immersion imm = make_surface(s);
  for (const Vector& u : testing::random_points(imm.domain(), 10, 3)) {
    const Vector x = imm.position(u);
    EXPECT_NEAR(x.head(3).norm(), 1.5, 1e-15);
    EXPECT_EQ(x[3], u[2]);
  }
}

TEST(MakeSurface, LinearProfileIsASphericalCone) {
  SurfaceSpec s = spec_of(SurfaceKind::kRotational);
  s.n = 3;
  s.profile = Profile::kLinear;
  s.c = 2.0;
  const Immersion imm = make_surface(s);
  for (const Vector& u : testing::random_points(imm.domain(), 10, 3)) {
    const Vector x = imm.position(u);
    EXPECT_NEAR(x.head(3).norm(), 2.0 * x[3], 1e-14);
  }
}

TEST(MakeSurface, CliffordTorusLiesInTheThreeSphere) {
  for (double r : {1.0, 2.5}) {
    SurfaceSpec s = spec_of(SurfaceKind::kCliffordTorus);
    s.r = r;
    const Immersion imm = make_surface(s);
    for (const Vector& u : testing::random_points(imm.domain(), 10, 4)) {
      EXPECT_NEAR(imm.position(u).norm(), r, 1e-14);
    }
  }
}

TEST(MakeSurface, RejectsInvalidParameters) {
  auto rejects = [](SurfaceSpec s) {
    try {
      make_surface(s);
      return false;
    } catch (const GeometryError& e) {
      return e.kind() == ErrorKind::kInvalidArgument;
    }
  };
  SurfaceSpec s = spec_of(SurfaceKind::kSphere);
  s.r = 0.0;
  EXPECT_TRUE(rejects(s));
  s.r = 1.0;
  s.center = vec({0, 0});
  EXPECT_TRUE(rejects(s));
  SurfaceSpec cone = spec_of(SurfaceKind::kCone);
  cone.slope = 0.0;
  EXPECT_TRUE(rejects(cone));
  SurfaceSpec rot = spec_of(SurfaceKind::kRotational);
  rot.profile = Profile::kLinear;
  rot.c = -1.0;
  EXPECT_TRUE(rejects(rot));
  rot.c = 1.0;
  rot.n = 1;
  EXPECT_TRUE(rejects(rot));
  SurfaceSpec curve = spec_of(SurfaceKind::kSphericalCurve);
  curve.amplitude = 1.2;
  EXPECT_TRUE(rejects(curve));
  SurfaceSpec plane = spec_of(SurfaceKind::kHyperplane);
  plane.offset = NAN;
  EXPECT_TRUE(rejects(plane));
}

TEST(Expected, Examples) {
  const Expectation s2 = expected(*find_catalog_entry("sphere_r2"));
  EXPECT_EQ(s2.yamabe_verdict, SolitonVerdict::kYamabe);
  EXPECT_DOUBLE_EQ(*s2.yamabe_lambda, 0.5);
  EXPECT_EQ(*s2.yamabe_sign, SolitonSign::kShrinking);

  const Expectation hp = expected(*find_catalog_entry("plane_offset"));
  EXPECT_DOUBLE_EQ(*hp.yamabe_lambda, -1.0);
  EXPECT_EQ(*hp.yamabe_sign, SolitonSign::kExpanding);
  EXPECT_EQ(hp.scalar_curvature(vec({0.3, 0.2})), 0.0);

  const Expectation ct = expected(*find_catalog_entry("clifford_torus"));
  EXPECT_EQ(ct.position_type, PositionType::kSpherical);
  EXPECT_DOUBLE_EQ(*ct.yamabe_lambda, 0.0);
  EXPECT_EQ(*ct.yamabe_sign, SolitonSign::kSteady);

  const Expectation cyl = expected(*find_catalog_entry("cylinder"));
  EXPECT_EQ(cyl.quasi, QuasiOutcome::kSoliton);
  EXPECT_DOUBLE_EQ(*cyl.quasi_lambda, 0.0);
  EXPECT_DOUBLE_EQ(cyl.quasi_mu(vec({0.0, 2.0})), 0.25);

  EXPECT_EQ(expected(*find_catalog_entry("cone")).position_type, PositionType::kConic);
}

// Internal consistency: a Yamabe expectation on a hypersurface names one of
// the two classes, unless the surface is conic and the violation is expected.
TEST(Expected, InternallyConsistent) {
  for (const SurfaceSpec& s : catalog()) {
    SCOPED_TRACE(s.name);
    const Expectation e = expected(s);
    const Immersion imm = make_surface(s);
    EXPECT_EQ(e.yamabe_lambda.has_value(), e.yamabe_verdict == SolitonVerdict::kYamabe);
    EXPECT_EQ(e.quasi_lambda.has_value(), e.quasi == QuasiOutcome::kSoliton);
    EXPECT_EQ(static_cast<bool>(e.quasi_mu), e.quasi == QuasiOutcome::kSoliton);
    EXPECT_TRUE(static_cast<bool>(e.scalar_curvature));
    EXPECT_FALSE(e.basis.empty());
    const bool codim1 = imm.ambient_dim() - imm.chart_dim() == 1;
    EXPECT_EQ(e.quasi_umbilical.has_value(), codim1);
    if (codim1 && e.yamabe_lambda) {
      if (e.theorem_violation) {
        EXPECT_EQ(e.position_type, PositionType::kConic);
        EXPECT_EQ(e.hypersurface_class, HypersurfaceClass::kOther);
      } else {
        EXPECT_TRUE(e.hypersurface_class == HypersurfaceClass::kHyperplane ||
                    e.hypersurface_class == HypersurfaceClass::kOriginCenteredSphere);
      }
    }
    if (e.position_type == PositionType::kSpherical) {
      EXPECT_FALSE(e.torse.has_value());
      EXPECT_EQ(e.quasi, QuasiOutcome::kUndefined);
    }
  }
}

TEST(Catalog, NamesAreUniqueAndFindable) {
  std::set<std::string> names;
  for (const SurfaceSpec& s : catalog()) {
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
    EXPECT_EQ(find_catalog_entry(s.name)->name, s.name);
  }
  EXPECT_FALSE(find_catalog_entry("no_such_surface").has_value());
  for (const char* kind : {"hyperplane", "sphere", "cylinder", "cone", "rotational",
                           "clifford_torus", "spherical_curve"}) {
    EXPECT_TRUE(parse_surface_kind(kind).has_value()) << kind;
  }
  EXPECT_FALSE(parse_surface_kind("torus").has_value());
}

TEST(Catalog, ExplainListsExpectations) {
  const std::string text = explain(*find_catalog_entry("cylinder"));
  EXPECT_NE(text.find("quasi_yamabe, lambda = 0"), std::string::npos);
  EXPECT_NE(text.find("proper_torse_forming"), std::string::npos);
  EXPECT_NE(text.find("mu = 1/z^2"), std::string::npos);
}

TEST(RotationalScalarCurvature, MatchesGaussEquation) {
  for (const char* name : {"rotational_catenary", "rotational_parabola", "rotational_cone3",
                           "rotational_cylinder4"}) {
    SCOPED_TRACE(name);
    const SurfaceSpec spec = *find_catalog_entry(name);
    const Expectation e = expected(spec);
    for (const SamplePoint& p : sample(spec).points) {
      EXPECT_NEAR(p.curvature.scalar, e.scalar_curvature(p.u), 1e-10);
    }
  }
}

// Proper rotational hypersurfaces with axis through the origin.
TEST(CatalogInvariants, NonlinearRotationalProfilesAreProper) {
  for (const char* name : {"rotational_catenary", "rotational_parabola"}) {
    EXPECT_EQ(classify_position_type(sample(*find_catalog_entry(name))), PositionType::kProper);
  }
}

// A quasi-Yamabe hypersurface with mu bounded away from zero is
// quasi-umbilical with x^T as distinguished direction, and x^T is
// torse-forming.
TEST(CatalogInvariants, QuasiYamabeImpliesQuasiUmbilicalAndTorseForming) {
  constexpr double tol = 1e-7;
  int checked = 0;
  for (const SurfaceSpec& spec : catalog()) {
    const SampleSet s = sample(spec);
    if (s.codim() != 1 || classify_position_type(s) != PositionType::kProper) continue;
    const SolitonFit fit = quasi_yamabe_fit(s, tol);
    if (fit.verdict != SolitonVerdict::kQuasiYamabe) continue;
    double min_mu = INFINITY;
    for (const auto& mu : fit.mu_values)
      if (mu) min_mu = std::min(min_mu, std::abs(*mu));
    if (!(min_mu > tol)) continue;
    SCOPED_TRACE(spec.name);
    const QuasiUmbilicalReport q = quasi_umbilical_check(s, tol);
    EXPECT_TRUE(q.quasi_umbilical);
    ASSERT_TRUE(q.alignment.has_value());
    EXPECT_GT(*q.alignment, 1.0 - 1e-6);
    EXPECT_LT(torse_forming_fit(s, tol).max_residual, tol);
    ++checked;
  }
  EXPECT_GE(checked, 3);
}

// Quasi fit with vanishing mu reproduces the Yamabe lambda.
TEST(CatalogInvariants, VanishingMuDegeneratesToYamabe) {
  constexpr double tol = 1e-7;
  int checked = 0;
  for (const SurfaceSpec& spec : catalog()) {
    const SampleSet s = sample(spec);
    SolitonFit q;
    try {
      q = quasi_yamabe_fit(s, tol);
    } catch (const GeometryError&) {
      continue;
    }
    if (q.fitted_points == 0) continue;
    bool all_small = true;
    for (const auto& mu : q.mu_values)
      if (mu && std::abs(*mu) >= tol) all_small = false;
    if (!all_small) continue;
    SCOPED_TRACE(spec.name);
    EXPECT_NEAR(q.lambda, yamabe_fit(s, tol).lambda, tol);
    ++checked;
  }
  EXPECT_GE(checked, 3);
}

// On non-conic hypersurfaces a Yamabe verdict always lands in one of the two
// classes; the flat cone is the documented exception.
TEST(CatalogInvariants, YamabeHypersurfaceClassIsExhaustiveOffCones) {
  constexpr double tol = 1e-7;
  for (const SurfaceSpec& spec : catalog()) {
    const SampleSet s = sample(spec);
    if (s.codim() != 1) continue;
    const SolitonFit fit = yamabe_fit(s, tol);
    if (fit.verdict != SolitonVerdict::kYamabe) continue;
    SCOPED_TRACE(spec.name);
    const HypersurfaceClassification c = classify_yamabe_hypersurface(s, fit, tol);
    if (classify_position_type(s) == PositionType::kConic && c.cls == HypersurfaceClass::kOther) {
      EXPECT_TRUE(c.theorem_violation);
      continue;
    }
    EXPECT_NE(c.cls, HypersurfaceClass::kOther);
    EXPECT_FALSE(c.theorem_violation);
  }
}

// On origin-centered spheres, Yamabe iff constant scalar curvature, and then
// lambda equals the mean R.
TEST(CatalogInvariants, SphericalYamabeIffConstantScalarCurvature) {
  constexpr double tol = 1e-7;
  for (const SurfaceSpec& spec : catalog()) {
    const SampleSet s = sample(spec);
    if (classify_position_type(s) != PositionType::kSpherical) continue;
    SCOPED_TRACE(spec.name);
    double mean = 0.0, var = 0.0;
    for (const SamplePoint& p : s.points) mean += p.curvature.scalar;
    mean /= s.points.size();
    for (const SamplePoint& p : s.points) var += std::pow(p.curvature.scalar - mean, 2);
    const bool constant_r = std::sqrt(var / s.points.size()) < tol;
    const SolitonFit fit = yamabe_fit(s, tol);
    EXPECT_EQ(fit.verdict == SolitonVerdict::kYamabe, constant_r);
    if (constant_r) EXPECT_NEAR(fit.lambda, mean, tol);
  }
}

}  // namespace
}  // namespace yamabe
