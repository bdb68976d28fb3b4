#include <gtest/gtest.h>

#include <cmath>

#include "test_surfaces.hpp"
#include "yamabe/errors.hpp"
#include "yamabe/soliton_lab.hpp"

namespace yamabe {
namespace {

using testing::kPi;
using testing::vec;

constexpr double kTol = 1e-7;

SampleSet sample(const Immersion& imm, int count = 40, unsigned seed = 3) {
  return make_sample_set(std::make_shared<const Immersion>(imm),
                         testing::random_points(imm.domain(), count, seed));
}

/// (u, v, u^2, v^2): a codimension-2 graph whose unit x^N is not parallel.
Immersion quadric_graph() {
  return Immersion(
      "quadric_graph", 2, 4,
      [](std::span<const Jet2> c) {
        return std::vector<Jet2>{c[0], c[1], square(c[0]), square(c[1])};
      },
      testing::box({0.5, 0.5}, {1.5, 1.5}));
}

Immersion flat_four() {
  return Immersion(
      "flat4", 4, 5,
      [](std::span<const Jet2> c) {
        return std::vector<Jet2>{c[0], c[1], c[2], c[3], Jet2(1.0)};
      },
      testing::box({-1, -1, -1, -1}, {1, 1, 1, 1}));
}

/// Circle of radius 1 centered at (2, 0).
Immersion offset_circle() {
  return Immersion(
      "offset_circle", 1, 2,
      [](std::span<const Jet2> c) {
        return std::vector<Jet2>{2.0 + cos(c[0]), sin(c[0])};
      },
      testing::box({-kPi}, {kPi}));
}

TEST(SampleSet, RequiresEnoughPoints) {
  const auto s = std::make_shared<const Immersion>(testing::sphere2());
  const std::vector<Vector> few(5, vec({1.0, 0.5}));
  try {
    make_sample_set(s, few);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
  EXPECT_EQ(make_sample_set(s, std::vector<Vector>(6, vec({1.0, 0.5}))).points.size(), 6u);
}

TEST(YamabeFit, OriginCenteredSpheres) {
  for (const auto& [n, r] : std::vector<std::pair<int, double>>{{2, 1.0}, {2, 2.0}, {3, 1.0}, {4, 0.5}}) {
    const SolitonFit fit = yamabe_fit(sample(testing::round_sphere(n, r)), kTol);
    EXPECT_EQ(fit.verdict, SolitonVerdict::kYamabe);
    EXPECT_NEAR(fit.lambda, n * (n - 1) / (r * r), 1e-9);
    EXPECT_LT(fit.max_residual, 1e-9);
    EXPECT_EQ(fit.soliton_sign, SolitonSign::kShrinking);
  }
}

TEST(YamabeFit, PlaneAtHeightOne) {
  const SolitonFit fit = yamabe_fit(sample(testing::plane(1.0)), kTol);
  EXPECT_EQ(fit.verdict, SolitonVerdict::kYamabe);
  EXPECT_NEAR(fit.lambda, -1.0, 1e-12);
  EXPECT_LT(fit.max_residual, 1e-12);
  EXPECT_EQ(fit.soliton_sign, SolitonSign::kExpanding);
}

TEST(YamabeFit, CylinderIsNotASoliton) {
  const SolitonFit fit = yamabe_fit(sample(testing::cylinder()), kTol);
  EXPECT_EQ(fit.verdict, SolitonVerdict::kNotASoliton);
  EXPECT_NEAR(fit.max_residual, 0.5, 1e-12);
  EXPECT_FALSE(fit.soliton_sign.has_value());
}

TEST(YamabeFit, OffCenterSphereHasNonconstantLambda) {
  const SolitonFit fit = yamabe_fit(sample(testing::sphere2(1.0, vec({0, 0, 2}))), kTol);
  EXPECT_EQ(fit.verdict, SolitonVerdict::kNotASoliton);
  EXPECT_GT(fit.lambda_spread, 0.05);
}

TEST(YamabeFit, TraceConsistency) {
  const SampleSet s = sample(testing::torus(2.0, 0.7));
  const SolitonFit fit = yamabe_fit(s, kTol);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const SamplePoint& p = s.points[k];
    const double trace = (p.metric.g_inv * p.sff.paired(p.split.xn_ambient)).trace() / 2.0;
    EXPECT_NEAR(*fit.lambda_per_point[k], p.curvature.scalar - 1.0 - trace, 1e-12);
  }
}

TEST(YamabeFit, EmptySetIsAnError) {
  SampleSet s;
  s.immersion = std::make_shared<const Immersion>(testing::plane());
  EXPECT_THROW(yamabe_fit(s, kTol), GeometryError);
}

TEST(SignOf, Thresholds) {
  EXPECT_EQ(sign_of(1e-6, kTol), SolitonSign::kShrinking);
  EXPECT_EQ(sign_of(5e-8, kTol), SolitonSign::kSteady);
  EXPECT_EQ(sign_of(-1e-6, kTol), SolitonSign::kExpanding);
}

TEST(QuasiYamabeFit, Cylinder) {
  const SampleSet s = sample(testing::cylinder());
  const SolitonFit fit = quasi_yamabe_fit(s, kTol);
  EXPECT_EQ(fit.verdict, SolitonVerdict::kQuasiYamabe);
  EXPECT_NEAR(fit.lambda, 0.0, 1e-12);
  EXPECT_EQ(fit.soliton_sign, SolitonSign::kSteady);
  EXPECT_EQ(fit.fitted_points, 40);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    const double z = s.points[k].u[1];
    EXPECT_NEAR(*fit.mu_values[k], 1.0 / (z * z), 1e-6);
  }
}

TEST(QuasiYamabeFit, PlaneDegeneratesToYamabe) {
  const SampleSet s = sample(testing::plane(1.0));
  const SolitonFit fit = quasi_yamabe_fit(s, kTol);
  EXPECT_EQ(fit.verdict, SolitonVerdict::kQuasiYamabe);
  EXPECT_NEAR(fit.lambda, yamabe_fit(s, kTol).lambda, kTol);
  for (const auto& mu : fit.mu_values) EXPECT_NEAR(*mu, 0.0, 1e-12);
}

TEST(QuasiYamabeFit, VanishingFieldIsAnError) {
  try {
    quasi_yamabe_fit(sample(testing::sphere2()), kTol);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUndefined);
    EXPECT_NE(std::string(e.what()).find("soliton field vanishes"), std::string::npos);
  }
}

TEST(QuasiYamabeFit, CurvesAreUnderdetermined) {
  const SolitonFit fit = quasi_yamabe_fit(sample(offset_circle()), kTol);
  EXPECT_TRUE(fit.underdetermined);
  EXPECT_TRUE(std::isnan(fit.lambda));
  EXPECT_EQ(fit.verdict, SolitonVerdict::kNotASoliton);
}

TEST(PositionType, Examples) {
  EXPECT_EQ(classify_position_type(sample(testing::cone())), PositionType::kConic);
  EXPECT_EQ(classify_position_type(sample(testing::sphere2(2.0))), PositionType::kSpherical);
  EXPECT_EQ(classify_position_type(sample(testing::clifford_torus())), PositionType::kSpherical);
  EXPECT_EQ(classify_position_type(sample(testing::cylinder())), PositionType::kProper);
}

TEST(HypersurfaceClass, Examples) {
  const SampleSet plane = sample(testing::plane(1.0));
  const HypersurfaceClassification hp = classify_yamabe_hypersurface(plane, yamabe_fit(plane, kTol));
  EXPECT_EQ(hp.cls, HypersurfaceClass::kHyperplane);
  EXPECT_FALSE(hp.theorem_violation);

  const SampleSet sphere = sample(testing::sphere2(2.0));
  const SolitonFit sf = yamabe_fit(sphere, kTol);
  EXPECT_NEAR(sf.lambda, 0.5, 1e-12);
  const HypersurfaceClassification hs = classify_yamabe_hypersurface(sphere, sf);
  EXPECT_EQ(hs.cls, HypersurfaceClass::kOriginCenteredSphere);
  EXPECT_FALSE(hs.theorem_violation);

  const SampleSet off = sample(testing::sphere2(1.0, vec({0, 0, 2})));
  EXPECT_EQ(classify_yamabe_hypersurface(off, yamabe_fit(off, kTol)).cls,
            HypersurfaceClass::kNotApplicable);
}

TEST(HypersurfaceClass, ConeThroughOriginIsFlaggedAsOther) {
  const SampleSet cone = sample(testing::cone());
  const SolitonFit fit = yamabe_fit(cone, kTol);
  EXPECT_EQ(fit.verdict, SolitonVerdict::kYamabe);
  EXPECT_NEAR(fit.lambda, -1.0, 1e-12);
  const HypersurfaceClassification c = classify_yamabe_hypersurface(cone, fit);
  EXPECT_EQ(c.cls, HypersurfaceClass::kOther);
  EXPECT_TRUE(c.theorem_violation);
}

TEST(HypersurfaceClass, WrongCodimension) {
  const SampleSet s = sample(testing::clifford_torus());
  EXPECT_THROW(classify_yamabe_hypersurface(s, yamabe_fit(s, kTol)), GeometryError);
}

TEST(QuasiUmbilical, Cylinder) {
  const SampleSet s = sample(testing::cylinder());
  const QuasiUmbilicalReport r = quasi_umbilical_check(s, kTol);
  EXPECT_TRUE(r.quasi_umbilical);
  ASSERT_TRUE(r.alignment.has_value());
  EXPECT_NEAR(*r.alignment, 1.0, 1e-12);
  EXPECT_LT(r.shape_fit_residual, 1e-8);
  for (const auto& phi : r.phi) EXPECT_NEAR(*phi, 0.0, 1e-12);
}

TEST(QuasiUmbilical, SphereHasNoDistinguishedDirection) {
  const QuasiUmbilicalReport r = quasi_umbilical_check(sample(testing::round_sphere(3, 1.0)), kTol);
  EXPECT_TRUE(r.quasi_umbilical);
  EXPECT_FALSE(r.alignment.has_value());
}

TEST(QuasiUmbilical, GenericEllipsoidIsNot) {
  const QuasiUmbilicalReport r =
      quasi_umbilical_check(sample(testing::ellipsoid3(1.0, 1.4, 1.9, 2.3)), kTol);
  EXPECT_FALSE(r.quasi_umbilical);
}

TEST(QuasiUmbilical, WrongCodimension) {
  EXPECT_THROW(quasi_umbilical_check(sample(testing::clifford_torus()), kTol), GeometryError);
}

TEST(TorseForming, CylinderIsProper) {
  const SampleSet s = sample(testing::cylinder());
  const TorseFormingFit f = torse_forming_fit(s, kTol);
  EXPECT_EQ(f.verdict, TorseVerdict::kProperTorseForming);
  EXPECT_LT(f.max_residual, 1e-8);
  EXPECT_DOUBLE_EQ(f.nonzero_alpha_fraction, 1.0);
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    EXPECT_NEAR(*f.phi[k], 0.0, 1e-12);
    EXPECT_NEAR(*f.alpha_norm[k], 1.0 / s.points[k].u[1], 1e-12);
  }
}

TEST(TorseForming, PlaneIsConcircular) {
  const TorseFormingFit f = torse_forming_fit(sample(testing::plane(1.0)), kTol);
  EXPECT_EQ(f.verdict, TorseVerdict::kConcircular);
  for (const auto& phi : f.phi) EXPECT_NEAR(*phi, 1.0, 1e-12);
}

TEST(TorseForming, GenericEllipsoidIsNot) {
  EXPECT_EQ(torse_forming_fit(sample(testing::ellipsoid3(1.0, 1.4, 1.9, 2.3)), kTol).verdict,
            TorseVerdict::kNotTorseForming);
}

TEST(TorseForming, TorusOfRevolutionAboutTheOrigin) {
  // x^T is along the meridians, a principal direction.
  EXPECT_EQ(torse_forming_fit(sample(testing::torus(2.0, 0.7)), kTol).verdict,
            TorseVerdict::kProperTorseForming);
}

TEST(TorseForming, VanishingFieldIsAnError) {
  EXPECT_THROW(torse_forming_fit(sample(testing::sphere2()), kTol), GeometryError);
}

TEST(NormalSection, CliffordTorusIsParallel) {
  const NormalSectionReport r = normal_section_parallelism(sample(testing::clifford_torus()), 1e-4);
  EXPECT_EQ(r.verdict, NormalSection::kParallel);
  EXPECT_LT(r.max_derivative, 1e-6);
}

TEST(NormalSection, HypersurfacesAreNotApplicable) {
  EXPECT_EQ(normal_section_parallelism(sample(testing::cylinder()), 1e-4).verdict,
            NormalSection::kNotApplicable);
}

TEST(NormalSection, QuadricGraphIsNonparallel) {
  const NormalSectionReport r = normal_section_parallelism(sample(quadric_graph()), 1e-4);
  EXPECT_EQ(r.verdict, NormalSection::kNonparallel);
  EXPECT_GT(r.max_derivative, 1e-2);
}

TEST(NormalSection, DeadBandIsIndeterminate) {
  const SampleSet s = sample(quadric_graph());
  const double max = normal_section_parallelism(s, 1e-4).max_derivative;
  try {
    normal_section_parallelism(s, max / 2.0);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIndeterminate);
  }
}

TEST(ConformalFlatness, Examples) {
  EXPECT_EQ(conformal_flatness_check(sample(testing::round_sphere(4, 1.0)), 1e-7).verdict,
            ConformalFlatness::kFlat);
  EXPECT_EQ(conformal_flatness_check(sample(flat_four()), 1e-7).verdict, ConformalFlatness::kFlat);
  EXPECT_EQ(conformal_flatness_check(sample(testing::round_sphere(3, 1.0)), 1e-7).verdict,
            ConformalFlatness::kNotApplicable);
}

// Constant scalar curvature on an origin-centered hypersphere is equivalent to
// the Yamabe verdict, with lambda equal to the mean R.
TEST(SolitonInvariants, SphericalYamabeIffConstantScalarCurvature) {
  for (const Immersion& imm : {testing::round_sphere(2, 1.3), testing::round_sphere(3, 0.8)}) {
    const SampleSet s = sample(imm);
    const SolitonFit fit = yamabe_fit(s, kTol);
    double mean_r = 0.0;
    for (const SamplePoint& p : s.points) mean_r += p.curvature.scalar;
    mean_r /= s.points.size();
    EXPECT_EQ(fit.verdict, SolitonVerdict::kYamabe);
    EXPECT_NEAR(fit.lambda, mean_r, kTol);
  }
}

}  // namespace
}  // namespace yamabe
