#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "elliptica/distortion.hpp"
#include "elliptica/extremals.hpp"
#include "generators.hpp"

using namespace elliptica;
using elliptica::testing::for_all;
using elliptica::testing::Gen;

namespace {

const HarmonicMap kAffine({0.0, 1.0}, {0.5});  // z + 0.5 conj(z)

}  // namespace

TEST(Distortion, AffineProfile) {
  const auto p = profile(kAffine, {0.2, -0.3});
  EXPECT_DOUBLE_EQ(p.lambda_max, 1.5);
  EXPECT_DOUBLE_EQ(p.lambda_min, 0.5);
  EXPECT_DOUBLE_EQ(p.jacobian, 0.75);
  EXPECT_DOUBLE_EQ(p.op_norm_sq, 2.25);
}

TEST(Distortion, IdentityAndF2AtOrigin) {
  for (const auto& f : {HarmonicMap::identity(), build_Fn(2, 2.0)}) {
    const auto p = profile(f, 0.0);
    EXPECT_EQ(p.lambda_max, 1.0);
    EXPECT_EQ(p.lambda_min, 1.0);
    EXPECT_EQ(p.jacobian, 1.0);
  }
}

TEST(Distortion, EllipticityExamples) {
  const auto affine = ellipticity_check(kAffine, EllipticityParams(3, 0), 0.9);
  EXPECT_EQ(affine.min_margin, 0.0);
  EXPECT_EQ(affine.label(), EvidenceKind::evidence);
  EXPECT_TRUE(affine.sense_preserving_everywhere_sampled);

  const auto id = ellipticity_check(HarmonicMap::identity(), EllipticityParams(1, 0), 0.9);
  EXPECT_EQ(id.min_margin, 0.0);

  const auto f2 = ellipticity_check(build_Fn(2, 2.0), EllipticityParams(1, 0), 0.99);
  EXPECT_GE(f2.min_margin, -1e-12);
  EXPECT_GT(f2.sample_count, 64L * 256);

  const auto bad = ellipticity_check(kAffine, EllipticityParams(1, 0), 0.9);
  EXPECT_LT(bad.min_margin, 0.0);
  EXPECT_EQ(bad.label(), EvidenceKind::certificate);
  EXPECT_STREQ(to_string(bad.label()), "certificate");
}

TEST(Distortion, SenseReversalIsReportedNotThrown) {
  const HarmonicMap reversing({0.0, 0.5}, {1.0});
  const auto r = ellipticity_check(reversing, EllipticityParams(2, 0), 0.5);
  EXPECT_FALSE(r.sense_preserving_everywhere_sampled);
  EXPECT_LT(r.min_margin, 0.0);
}

TEST(Distortion, RegionRadiusValidated) {
  EXPECT_THROW(ellipticity_check(kAffine, EllipticityParams(3, 0), 1.0), std::domain_error);
  EXPECT_THROW(sup_lambda_min(kAffine, 0.0), std::domain_error);
}

TEST(Distortion, SupLambdaExamples) {
  EXPECT_EQ(sup_lambda_min(HarmonicMap::identity(), 0.9).value, 1.0);
  EXPECT_DOUBLE_EQ(sup_lambda_min(kAffine, 0.9).value, 0.5);
  EXPECT_LE(sup_lambda_min(build_Fn(2, 2.0, 400), 0.999).value, 2.0 + 1e-9);
}

TEST(DistortionProperty, RotationInvariance) {
  for_all(20, 201, [](Gen& g) {
    const auto f = g.polynomial_map(8, 0.5);
    const double theta = g.uniform(0, 2 * std::numbers::pi);
    const Complex z = g.in_disk(0.9);
    const auto p = profile(precompose_rotation(f, theta), z);
    const auto q = profile(f, std::polar(1.0, theta) * z);
    const double s = std::max(1.0, q.op_norm_sq);
    EXPECT_NEAR(p.lambda_max, q.lambda_max, 1e-12 * s);
    EXPECT_NEAR(p.lambda_min, q.lambda_min, 1e-12 * s);
    EXPECT_NEAR(p.jacobian, q.jacobian, 1e-12 * s);
  });
}

TEST(DistortionProperty, AnalyticMapsHaveEqualDistortions) {
  for_all(50, 203, [](Gen& g) {
    const auto f = g.polynomial_map(8, 0.5, false);
    const Complex z = g.in_disk(0.99);
    const auto p = profile(f, z);
    EXPECT_EQ(p.lambda_max, p.lambda_min);
    EXPECT_NEAR(p.jacobian, p.lambda_max * p.lambda_max, 1e-14 * std::max(1.0, p.jacobian));
  });
}

TEST(DistortionProperty, DistortionProductIsAbsJacobian) {
  for_all(100, 205, [](Gen& g) {
    const auto f = g.polynomial_map(8, 0.5);
    const auto p = profile(f, g.in_disk(0.99));
    EXPECT_NEAR(p.lambda_max * p.lambda_min, std::abs(p.jacobian), 1e-12 * std::max(1.0, p.op_norm_sq));
  });
}

TEST(DistortionProperty, KpShiftsTheMarginExactly) {
  for_all(20, 207, [](Gen& g) {
    const auto f = g.polynomial_map(6, 0.3);
    const EllipticityParams p = g.params(4, 4);
    const double c = g.uniform(0, 3);
    const SamplingSpec grid(16, 64, 2);
    const auto a = ellipticity_check(f, p, 0.9, grid);
    const auto b = ellipticity_check(f, EllipticityParams(p.K(), p.Kp() + c), 0.9, grid);
    EXPECT_EQ(a.worst_point, b.worst_point);
    EXPECT_NEAR(b.min_margin, a.min_margin + c, 1e-12 * (std::abs(a.min_margin) + p.Kp() + c + 1));
  });
}

TEST(DistortionProperty, LargerKNeverLowersThePointwiseMargin) {
  for_all(100, 208, [](Gen& g) {
    const auto f = g.polynomial_map(6, 0.3);
    const auto q = profile(f, g.in_disk(0.95));
    const EllipticityParams p = g.params(4, 4);
    const double K2 = p.K() + g.uniform(0, 3);
    const double m1 = p.K() * q.jacobian + p.Kp() - q.op_norm_sq;
    const double m2 = K2 * q.jacobian + p.Kp() - q.op_norm_sq;
    if (q.jacobian >= 0) {
      EXPECT_GE(m2, m1);
    }
  });
}

TEST(DistortionProperty, SerialAndParallelChecksAgree) {
  for_all(10, 209, [](Gen& g) {
    const auto f = g.polynomial_map(8, 0.4);
    const auto p = g.params();
    const SamplingSpec grid(24, 96, 2);
    const auto s = ellipticity_check(f, p, 0.95, grid, Execution::serial);
    const auto q = ellipticity_check(f, p, 0.95, grid, Execution::parallel);
    EXPECT_EQ(s.min_margin, q.min_margin);
    EXPECT_EQ(s.worst_point, q.worst_point);
    EXPECT_EQ(s.sample_count, q.sample_count);
    EXPECT_EQ(sup_lambda_min(f, 0.95, grid, Execution::serial).value,
              sup_lambda_min(f, 0.95, grid, Execution::parallel).value);
  });
}

TEST(DistortionProperty, SupLambdaNondecreasingInRadius) {
  for_all(20, 211, [](Gen& g) {
    const auto f = g.polynomial_map(8, 0.5);
    const double r1 = g.uniform(0.1, 0.5);
    const SamplingSpec grid(32, 128, 1);
    // The grid at 2 r1 contains every ring radius of the grid at r1 on its even rings.
    const SamplingSpec doubled(64, 128, 1);
    EXPECT_LE(sup_lambda_min(f, r1, grid).value, sup_lambda_min(f, 2 * r1, doubled).value);
  });
}

TEST(Sampling, GridLayoutAndValidation) {
  const auto pts = polar_grid(0.5, 2, 4);
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts[0], Complex(0.0));
  EXPECT_NEAR(std::abs(pts[1]), 0.25, 1e-16);
  EXPECT_NEAR(std::abs(pts[8]), 0.5, 1e-16);
  EXPECT_THROW(SamplingSpec(0, 4, 1), std::invalid_argument);
  EXPECT_THROW(SamplingSpec::parse_grid("12"), std::invalid_argument);
  const auto s = SamplingSpec::parse_grid("12,34");
  EXPECT_EQ(s.n_r(), 12);
  EXPECT_EQ(s.n_theta(), 34);
  EXPECT_EQ(s.refined().n_theta(), 68);
  EXPECT_DOUBLE_EQ(halton(1, 2), 0.5);
  EXPECT_DOUBLE_EQ(halton(3, 2), 0.75);
  EXPECT_DOUBLE_EQ(halton(1, 3), 1.0 / 3.0);
}
