#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "elliptica/constants.hpp"
#include "elliptica/extremals.hpp"
#include "elliptica/precise.hpp"
#include "generators.hpp"

using namespace elliptica;
using elliptica::testing::for_all;
using elliptica::testing::Gen;

namespace {

// n-point Gauss-Legendre rule on [0, 1].
struct GaussLegendre {
  std::vector<double> x, w;
  explicit GaussLegendre(int n) {
    for (int i = 1; i <= n; ++i) {
      double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x.push_back(0.5 * (1.0 - z));
      w.push_back(1.0 / ((1.0 - z * z) * dp * dp));
    }
  }
  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
    return s;
  }
};

// psi(t) = int_0^1 s/(t+s) ds.
double psi_quadrature(double t) {
  static const GaussLegendre rule(80);
  return rule.integrate([t](double s) { return s / (t + s); });
}

double Lambda_max(double K, double Kp, double lam) {
  return 0.5 * (K * lam + std::sqrt(K * K * lam * lam + 4.0 * Kp));
}

const std::vector<double> kKs{1, 1.5, 2, 4, 8};
const std::vector<double> kKps{0, 0.25, 1, 4, 10};

}  // namespace

TEST(Constants, PsiFixtures) {
  EXPECT_NEAR(psi(1.5), 0.23376156435101397519, 1e-15);
  EXPECT_NEAR(psi(2.0), 0.18906978378367123604, 1e-15);
  EXPECT_NEAR(psi(3.75), 0.11354208225913602245, 1e-15);
  EXPECT_NEAR(psi(1e-8), 0.99999981579319246048, 1e-15);
  EXPECT_GT(psi(1e-8), 1 - 1e-6);
  EXPECT_LT(psi(1e-8), 1.0);
  EXPECT_NEAR(psi(1e6) / 4.999996666669166665e-7, 1.0, 1e-12);
  const double t = 1e6;
  EXPECT_GE(psi(t), 1.0 / (2 * t + 2) * (1 - 1e-3));
  EXPECT_LE(psi(t), 1.0 / (2 * t) * (1 + 1e-3));
  EXPECT_THROW(psi(0.0), std::invalid_argument);
}

TEST(ConstantsProperty, PsiMatchesQuadratureOfItsIntegralForm) {
  for_all(200, 101, [](Gen& g) {
    const double t = std::exp(g.uniform(std::log(0.05), std::log(100.0)));
    EXPECT_NEAR(psi(t), psi_quadrature(t), 1e-13);
  });
}

TEST(ConstantsProperty, PsiStrictlyDecreasing) {
  for_all(500, 103, [](Gen& g) {
    const double a = std::exp(g.uniform(std::log(1e-6), std::log(1e6)));
    const double b = a * (1.0 + g.uniform(1e-6, 1.0));
    EXPECT_GT(psi(a), psi(b));
  });
}

TEST(ConstantsProperty, PsiSeriesBranchIsContinuous) {
  const double below = psi(std::nextafter(16.0, 0.0));
  const double at = psi(16.0);
  EXPECT_NEAR(below, at, 1e-15);
  EXPECT_GT(psi(16.0 * (1 - 1e-9)), at);
  EXPECT_GT(at, psi(16.0 * (1 + 1e-9)));
}

TEST(Constants, CoefficientBoundExamples) {
  EXPECT_NEAR(coeff_bound(2, EllipticityParams(1, 0), DistortionBound(2)), 0.75, 1e-15);
  EXPECT_NEAR(coeff_bound(2, EllipticityParams(1, 0), DistortionBound(2)), (4.0 - 1.0) / (2 * 2), 1e-15);
  for (int n = 2; n < 10; ++n) EXPECT_EQ(coeff_bound(n, EllipticityParams(1, 0), DistortionBound(1)), 0.0);
  EXPECT_NEAR(coeff_bound(3, EllipticityParams(2, 1), DistortionBound(1)), 2.0 / 3.0, 1e-15);
  EXPECT_THROW(coeff_bound(1, EllipticityParams(1, 0), DistortionBound(2)), std::invalid_argument);
}

TEST(ConstantsProperty, CoefficientBoundIsTOverN) {
  for_all(100, 107, [](Gen& g) {
    const auto p = g.params();
    const DistortionBound lam(g.uniform(1, 8));
    const double T = landau(p, lam).T;
    for (int n = 2; n <= 12; ++n) {
      EXPECT_EQ(coeff_bound(n, p, lam), T / n);
      EXPECT_DOUBLE_EQ(n * coeff_bound(n, p, lam), T);
    }
  });
}

TEST(Constants, LandauExamples) {
  const auto a = landau(EllipticityParams(1, 0), DistortionBound(2));
  EXPECT_NEAR(a.T, 1.5, 1e-15);
  EXPECT_NEAR(a.r1, 0.4, 1e-15);
  EXPECT_NEAR(a.sigma1, 0.23376156435101397519, 1e-14);
  const auto b = landau(EllipticityParams(1, 1), DistortionBound(1));
  EXPECT_NEAR(b.T, 1.0, 1e-15);
  EXPECT_NEAR(b.r1, 0.5, 1e-15);
  EXPECT_NEAR(b.sigma1, 1 + std::log(0.5), 1e-15);
  EXPECT_NEAR(b.sigma1, 0.30685281944005469058, 1e-15);
  const auto c = landau(EllipticityParams(1, 0), DistortionBound(1));
  EXPECT_EQ(c.T, 0.0);
  EXPECT_EQ(c.r1, 1.0);
  EXPECT_EQ(c.sigma1, 1.0);
  const auto d = landau(EllipticityParams(2, 0.5), DistortionBound(1.5));
  EXPECT_NEAR(d.T, 2.8416876048223000754, 1e-14);
  EXPECT_NEAR(d.r1, 0.26030226891555272453, 1e-15);
  EXPECT_NEAR(d.sigma1, 0.14319240453636028874, 1e-14);
  const auto e = landau(EllipticityParams(2, 3), DistortionBound(1.5));
  EXPECT_NEAR(e.T, 3.5275252316519466689, 1e-14);
  EXPECT_NEAR(e.r1, 0.22087121525220799967, 1e-15);
  EXPECT_NEAR(e.sigma1, 0.11960404062968828402, 1e-14);
}

TEST(ConstantsProperty, TIsLambdaMinusItsReciprocal) {
  for_all(200, 109, [](Gen& g) {
    const double K = g.uniform(1, 8), Kp = g.uniform(0, 10), lam = g.uniform(1, 8);
    const double L = Lambda_max(K, Kp, lam);
    const auto r = landau(EllipticityParams(K, Kp), DistortionBound(lam));
    EXPECT_NEAR(r.T, L - 1 / L, 1e-13 * L);
  });
}

TEST(Constants, IdentitiesOnTheParameterGrid) {
  for (double K : kKs) {
    for (double Kp : kKps) {
      const EllipticityParams p(K, Kp);
      const auto b = bloch_theorem3(p);
      EXPECT_NEAR(b.rho, psi(b.t) / std::sqrt(2.0), 1e-12);
      const double t_direct = 2 * K + (4 * Kp - 1) / (K + std::sqrt(K * K + 4 * Kp));
      EXPECT_NEAR(b.t, t_direct, 1e-14 * t_direct);
      const auto c = bloch_corollary1(p);
      const auto widened = bloch_theorem3(EllipticityParams(K, Kp * (K + Kp)));
      EXPECT_NEAR(c.t, widened.t, 1e-13 * c.t);
      EXPECT_NEAR(c.rho, widened.rho / std::sqrt(K + Kp), 1e-12);
      for (double lam : {1.0, 1.5, 2.0, 5.0}) {
        const auto r = landau(p, DistortionBound(lam));
        EXPECT_NEAR(r.sigma1, r.T > 0 ? psi(r.T) : 1.0, 1e-12);
      }
    }
  }
}

TEST(Constants, ReductionAtKpZero) {
  for (double K : {1.0, 2.0, 4.0}) {
    for (double lam : {1.2, 2.0, 5.0}) {
      const auto r = landau(EllipticityParams(K, 0), DistortionBound(lam));
      const double Kl = K * lam;
      EXPECT_NEAR(r.T, Kl - 1 / Kl, 1e-13);
      EXPECT_NEAR(r.r1, Kl / (Kl * Kl + Kl - 1), 1e-13);
    }
  }
}

TEST(ConstantsProperty, R1DecreasesInEachParameter) {
  for_all(200, 113, [](Gen& g) {
    const double K = g.uniform(1, 8), Kp = g.uniform(0, 8), lam = g.uniform(1, 8);
    const double d = g.uniform(1e-3, 1.0);
    const double base = landau(EllipticityParams(K, Kp), DistortionBound(lam)).r1;
    EXPECT_GT(base, landau(EllipticityParams(K + d, Kp), DistortionBound(lam)).r1);
    EXPECT_GT(base, landau(EllipticityParams(K, Kp + d), DistortionBound(lam)).r1);
    EXPECT_GT(base, landau(EllipticityParams(K, Kp), DistortionBound(lam + d)).r1);
  });
}

TEST(Constants, BlochExamples) {
  const auto a = bloch_theorem3(EllipticityParams(1, 0));
  EXPECT_NEAR(a.t, 1.5, 1e-15);
  EXPECT_NEAR(a.rho, 0.16529438733337748721, 1e-15);
  EXPECT_EQ(a.kind, BlochKind::theorem3);
  const auto b = bloch_theorem3(EllipticityParams(1, 0.25));
  EXPECT_EQ(b.t, 2.0);
  EXPECT_NEAR(b.rho, psi(2.0) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b.rho, 0.13369252623090826819, 1e-15);
  const auto c = bloch_corollary1(EllipticityParams(1, 0));
  EXPECT_NEAR(c.rho, a.rho, 1e-15);
  EXPECT_EQ(c.kind, BlochKind::corollary1);
  const auto d = bloch_corollary1(EllipticityParams(1, 1));
  EXPECT_NEAR(d.t, 3.75, 1e-15);
  EXPECT_NEAR(d.rho, psi(3.75) / 2, 1e-15);
  EXPECT_NEAR(d.rho, 0.056771041129568011226, 1e-15);
}

TEST(Constants, Rho1DecreasesToZeroInK) {
  double prev = bloch_theorem3(EllipticityParams(1, 0.5)).rho;
  for (int k = 1; k <= 10; ++k) {
    const double cur = bloch_theorem3(EllipticityParams(std::ldexp(1.0, k), 0.5)).rho;
    EXPECT_LT(cur, prev);
    prev = cur;
  }
  EXPECT_LT(prev, 1e-3);
}

// Exploratory scan: the corollary bound sits below the theorem bound on this grid.
TEST(ConstantsProperty, CorollaryBoundBelowTheoremBound) {
  for_all(300, 127, [](Gen& g) {
    const EllipticityParams p(g.uniform(1, 8), g.uniform(1e-3, 8));
    EXPECT_LE(bloch_corollary1(p).rho, bloch_theorem3(p).rho);
  });
}

TEST(Constants, ClassicalLandauExamples) {
  const auto one = classical_landau(1.0);
  EXPECT_EQ(one.r0, 1.0);
  EXPECT_EQ(one.R0, 1.0);
  const auto two = classical_landau(2.0);
  EXPECT_NEAR(two.r0, 1 / (2 + std::sqrt(3.0)), 1e-16);
  EXPECT_NEAR(two.r0, 0.26794919243112270647, 1e-16);
  EXPECT_NEAR(two.R0, 0.14359353944898165178, 1e-16);
  EXPECT_NEAR(1e6 * classical_landau(1e6).r0, 0.5, 1e-9);
  EXPECT_THROW(classical_landau(0.5), std::invalid_argument);
}

TEST(Constants, ClassicalRadiusIsTheCriticalPointOfTheExtremal) {
  // Bisection on the derivative of M z (1 - M z)/(M - z) along the real axis.
  const double M = 2.0;
  auto deriv = [M](double x) {
    const double h = 1e-7;
    return (classical_extremal_value(M, x + h) - classical_extremal_value(M, x - h)).real() / (2 * h);
  };
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (deriv(mid) > 0 ? lo : hi) = mid;
  }
  const auto c = classical_landau(M);
  EXPECT_NEAR(lo, c.r0, 1e-8);
  EXPECT_NEAR(std::abs(classical_extremal_value(M, c.r0)), c.R0, 1e-14);
}

TEST(Constants, RemarkInequalityExamples) {
  const auto a = remark_inequalities(EllipticityParams(1, 0), DistortionBound(2));
  EXPECT_NEAR(a.r1.slack, 0.4 - 0.5, 1e-15);
  EXPECT_FALSE(a.r1.holds);
  EXPECT_TRUE(a.correction.holds);
  EXPECT_TRUE(a.sigma1.holds);

  const auto b = remark_inequalities(EllipticityParams(2, 3), DistortionBound(1.5));
  EXPECT_TRUE(b.all_hold());

  // On the line K' = 1 the correction vanishes and r1 equals 1/(K lam + 1) exactly.
  const auto c = remark_inequalities(EllipticityParams(1, 1), DistortionBound(1.0001));
  EXPECT_TRUE(c.correction.holds);
  EXPECT_EQ(c.correction.lhs, 0.0);
  EXPECT_EQ(c.correction.rhs, 1.0);
  EXPECT_NEAR(c.r1.slack, 0.0, 1e-15);
  EXPECT_TRUE(c.sigma1.holds);
  EXPECT_THROW(remark_inequalities(EllipticityParams(1, 1), DistortionBound(1.0)), std::invalid_argument);
}

TEST(ConstantsProperty, RemarkInequalitiesMatchDirectEvaluation) {
  for_all(200, 131, [](Gen& g) {
    const double K = g.uniform(1, 8), Kp = g.uniform(0, 8), lam = g.uniform(1.0 + 1e-9, 8);
    const auto r = remark_inequalities(EllipticityParams(K, Kp), DistortionBound(lam));
    const double L = Lambda_max(K, Kp, lam);
    const double T = L - 1 / L;
    const double corr = T - K * lam;
    EXPECT_NEAR(r.correction.lhs, corr, 1e-12);
    EXPECT_EQ(r.correction.holds, corr < std::sqrt(Kp));
    const double older = K * lam + std::sqrt(Kp);
    EXPECT_NEAR(r.r1.rhs, 1 / older, 1e-15);
    EXPECT_NEAR(r.sigma1.rhs, psi(older), 1e-12);
    EXPECT_NEAR(r.sigma1.lhs, psi(T), 1e-12);
    // psi decreasing turns the sigma1 comparison into T < K lam + sqrt(K').
    EXPECT_TRUE(r.sigma1.holds);
  });
}

TEST(Constants, PrecisePathAgreesWithDouble) {
  ScopedPrecision guard(50);
  for (double K : kKs) {
    for (double Kp : kKps) {
      for (double lam : {1.5, 2.0, 5.0}) {
        const auto d = landau(EllipticityParams(K, Kp), DistortionBound(lam));
        const auto p = formulas::landau(Precise(K), Precise(Kp), Precise(lam));
        EXPECT_NEAR(d.sigma1, p.sigma1.convert_to<double>(), 1e-15);
        EXPECT_NEAR(d.r1, p.r1.convert_to<double>(), 1e-15);
      }
      const auto b = formulas::bloch_theorem3(Precise(K), Precise(Kp));
      EXPECT_NEAR(bloch_theorem3(EllipticityParams(K, Kp)).rho, b.rho.convert_to<double>(), 1e-15);
    }
  }
}

TEST(Constants, ParameterValidation) {
  EXPECT_THROW(EllipticityParams(0.5, 0), std::invalid_argument);
  EXPECT_THROW(EllipticityParams(1, -0.1), std::invalid_argument);
  EXPECT_THROW(DistortionBound(0.9), std::invalid_argument);
  EXPECT_THROW(EllipticityParams(std::nan(""), 0), std::invalid_argument);
  try {
    EllipticityParams(0.5, 0);
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("K >= 1"), std::string::npos);
  }
}
