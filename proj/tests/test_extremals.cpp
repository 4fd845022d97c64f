#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "elliptica/constants.hpp"
#include "elliptica/distortion.hpp"
#include "elliptica/extremals.hpp"
#include "generators.hpp"

using namespace elliptica;
using elliptica::testing::for_all;
using elliptica::testing::Gen;

namespace {

// Taylor coefficient k of an analytic function by the trapezoid rule on |z| = rho.
Complex cauchy_coefficient(const std::function<Complex(Complex)>& f, int k, double rho, int points = 256) {
  Complex sum = 0.0;
  for (int j = 0; j < points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / points;
    sum += f(std::polar(rho, theta)) * std::polar(1.0, -k * theta);
  }
  return sum / (static_cast<double>(points) * std::pow(rho, k));
}

bool on_lattice(int degree, int n) { return degree >= 1 && (degree - 1) % (n - 1) == 0; }

}  // namespace

TEST(Extremals, F2Coefficients) {
  const auto f = build_Fn(2, 2.0, 8);
  EXPECT_TRUE(f.is_analytic());
  EXPECT_TRUE(f.antianalytic().empty());
  EXPECT_EQ(f.a(0), Complex(0.0));
  EXPECT_EQ(f.a(1), Complex(1.0));
  EXPECT_DOUBLE_EQ(f.a(2).real(), 0.75);
  EXPECT_DOUBLE_EQ(f.a(3).real(), -0.25);
  EXPECT_DOUBLE_EQ(f.a(4).real(), 3.0 / 32.0);
}

TEST(Extremals, CoefficientsLiveOnTheLatticeAndAlternate) {
  for (int n = 2; n <= 8; ++n) {
    for (double lam : {1.5, 2.0, 5.0}) {
      const auto f = build_Fn(n, lam, 200);
      for (int d = 2; d <= 200; ++d) {
        const double c = f.a(d).real();
        EXPECT_EQ(f.a(d).imag(), 0.0);
        if (!on_lattice(d, n)) {
          EXPECT_EQ(c, 0.0) << "n=" << n << " degree " << d;
          continue;
        }
        const int k = (d - 1) / (n - 1);
        if (c == 0.0) continue;  // underflow far out
        EXPECT_EQ(c > 0.0, k % 2 == 1) << "n=" << n << " degree " << d;
      }
      EXPECT_DOUBLE_EQ(f.a(n).real(), (lam * lam - 1.0) / (n * lam));
    }
  }
}

TEST(Extremals, LemmaAFamily) {
  const auto a = build_Fn(2, 2.0);
  const auto b = build_fn_lemmaA(2, 2.0);
  EXPECT_EQ(a.analytic(), b.analytic());
  EXPECT_EQ(a.tail_bound(), b.tail_bound());
  for (int n = 2; n <= 6; ++n) {
    const auto f = build_fn_lemmaA(n, 3.0);
    EXPECT_DOUBLE_EQ(std::abs(f.a(n)) + std::abs(f.b(n)), 8.0 / (3.0 * n));
  }
  const auto id = build_fn_lemmaA(3, 1.0);
  for (int d = 2; d <= id.degree(); ++d) EXPECT_EQ(id.a(d), Complex(0.0));
  EXPECT_EQ(id.a(1), Complex(1.0));
}

TEST(Extremals, CoefficientAtNMatchesTheBound) {
  const EllipticityParams p(1, 0);
  for (int n = 2; n <= 8; ++n) {
    for (double lam : {1.5, 2.0, 5.0}) {
      const auto f = build_Fn(n, lam);
      EXPECT_NEAR(std::abs(f.a(n)) + std::abs(f.b(n)), coeff_bound(n, p, DistortionBound(lam)), 1e-15);
    }
  }
}

TEST(Extremals, FnHypotheses) {
  for (int n = 2; n <= 8; ++n) {
    for (double lam : {1.5, 2.0, 5.0}) {
      const auto f = build_Fn(n, lam, fn_degree_for_accuracy(n, lam, 0.999, 1e-13));
      const auto p0 = profile(f, 0.0);
      EXPECT_EQ(eval(f, 0.0), Complex(0.0));
      EXPECT_EQ(p0.lambda_min, 1.0);
      EXPECT_LE(sup_lambda_min(f, 0.999).value, lam + 1e-9) << "n=" << n << " lam=" << lam;
      EXPECT_GE(ellipticity_check(f, EllipticityParams(1, 0), 0.999).min_margin, -1e-9);
    }
  }
}

TEST(ExtremalsProperty, FnMatchesItsClosedFormDerivative) {
  for_all(40, 301, [](Gen& g) {
    const int n = g.integer(2, 8);
    const double lam = g.uniform(1.0, 6.0);
    const auto f = build_Fn(n, lam, fn_degree_for_accuracy(n, lam, 0.95, 1e-14));
    const Complex z = g.in_disk(0.95);
    const Complex expected = lam * lam - (lam * lam * lam - lam) / (lam + std::pow(z, n - 1));
    EXPECT_LT(std::abs(partials(f, z).dz - expected), 1e-12);
  });
}

TEST(ExtremalsProperty, DegreeForAccuracyIsSound) {
  for_all(30, 303, [](Gen& g) {
    const int n = g.integer(2, 8);
    const double lam = g.uniform(1.1, 8.0);
    const double radius = g.uniform(0.5, 0.999);
    const double tol = std::pow(10.0, -g.uniform(6, 13));
    const int N = fn_degree_for_accuracy(n, lam, radius, tol);
    const auto coarse = build_Fn(n, lam, N);
    const auto fine = build_Fn(n, lam, 4 * N + 64);
    for (int j = 0; j < 64; ++j) {
      const Complex z = std::polar(radius, 2.0 * std::numbers::pi * j / 64);
      EXPECT_LE(std::abs(partials(coarse, z).dz - partials(fine, z).dz), tol * (1 + 1e-6) + 1e-15);
    }
  });
}

TEST(ExtremalsProperty, TailBoundIsSound) {
  for_all(20, 305, [](Gen& g) {
    const int n = g.integer(2, 8);
    const double lam = g.uniform(1.0, 8.0);
    const int N = g.integer(n, 40);
    const auto coarse = build_Fn(n, lam, N);
    const auto fine = build_Fn(n, lam, 2 * N);
    for (int j = 0; j < 16; ++j) {
      const Complex z = g.in_disk(coarse.reference_radius());
      EXPECT_LE(std::abs(eval(coarse, z) - eval(fine, z)), coarse.tail_bound() + 1e-15);
    }
  });
}

TEST(Extremals, ClassicalNormalisationAndSeries) {
  const auto f = build_classical(2.0);
  EXPECT_EQ(eval(f, 0.0), Complex(0.0));
  EXPECT_DOUBLE_EQ(partials(f, 0.0).dz.real(), 1.0);
  const auto direct = [](Complex z) { return classical_extremal_value(2.0, z); };
  for (int k = 1; k <= 10; ++k) {
    EXPECT_NEAR(std::abs(f.a(k) - cauchy_coefficient(direct, k, 0.5)), 0.0, 1e-10) << "k=" << k;
  }
  EXPECT_NEAR(f.a(2).real(), -1.5, 1e-15);
  for (int j = 0; j < 32; ++j) {
    const Complex z = std::polar(0.5, 0.2 * j);
    EXPECT_LE(std::abs(eval(f, z) - direct(z)), f.tail_bound() + 1e-15);
  }
}

TEST(ExtremalsProperty, ClassicalSeriesMatchesRationalForm) {
  for_all(20, 307, [](Gen& g) {
    const double M = g.uniform(1.05, 10.0);
    const auto f = build_classical(M, 200);
    const Complex z = g.in_disk(0.9);
    EXPECT_NEAR(std::abs(eval(f, z) - classical_extremal_value(M, z)), 0.0, 1e-12 + f.tail_bound());
  });
}

TEST(Extremals, ClassicalImageOfTheCriticalCircle) {
  const auto c = classical_landau(2.0);
  double lowest = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 4096; ++j) {
    const Complex z = std::polar(c.r0, 2.0 * std::numbers::pi * j / 4096);
    lowest = std::min(lowest, std::abs(classical_extremal_value(2.0, z)));
  }
  EXPECT_GE(lowest, c.R0 - 1e-9);
  EXPECT_LE(lowest, c.R0 + 1e-12);
}

TEST(Extremals, FamilyNamesAndValidation) {
  EXPECT_EQ(parse_extremal_family("Fn"), ExtremalFamily::Fn_theorem1);
  EXPECT_EQ(parse_extremal_family("fn"), ExtremalFamily::fn_lemmaA);
  EXPECT_EQ(parse_extremal_family("classical"), ExtremalFamily::classical_landau);
  EXPECT_THROW(parse_extremal_family("FN"), std::invalid_argument);
  for (auto fam : {ExtremalFamily::Fn_theorem1, ExtremalFamily::fn_lemmaA, ExtremalFamily::classical_landau}) {
    EXPECT_EQ(parse_extremal_family(to_string(fam)), fam);
  }
  EXPECT_THROW(build_Fn(1, 2.0), std::invalid_argument);
  EXPECT_THROW(build_Fn(2, 0.5), std::invalid_argument);
  EXPECT_THROW(build_Fn(5, 2.0, 4), std::invalid_argument);
  EXPECT_THROW(build_classical(1.0), std::invalid_argument);
  EXPECT_THROW(build_classical(2.0, 1), std::invalid_argument);
  EXPECT_EQ(build({ExtremalFamily::classical_landau, 0, 3.0}).analytic(), build_classical(3.0).analytic());
}
