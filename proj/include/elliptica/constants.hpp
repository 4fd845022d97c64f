#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "elliptica/params.hpp"

namespace elliptica {

// Closed-form constants, generic over the real type so the same expressions
// can be evaluated in double and in multiprecision (see precise.hpp). These
// follow the printed formulas literally; the typed double API further down
// validates parameters and is what the rest of the library uses.
namespace formulas {

/// psi(t) = 1 + t ln(t / (1 + t)), t > 0.
template <class Real>
Real psi(const Real& t) {
  using std::log;
  if (!(t > 0)) throw std::invalid_argument("psi(t) requires t > 0");
  return Real(1) + t * log(t / (Real(1) + t));
}

/// The bracketed quantity K lam + 2(K'-1)/(K lam + sqrt(K^2 lam^2 + 4K')).
template <class Real>
Real landau_T(const Real& K, const Real& Kp, const Real& lam) {
  using std::sqrt;
  const Real Kl = K * lam;
  return Kl + Real(2) * (Kp - Real(1)) / (Kl + sqrt(Kl * Kl + Real(4) * Kp));
}

/// Largest Lambda_f compatible with lambda_f <= lam and ||D_f||^2 <= K J_f + K':
/// (K lam + sqrt(K^2 lam^2 + 4K')) / 2. T equals Lambda - 1/Lambda at this value.
template <class Real>
Real max_length_distortion(const Real& K, const Real& Kp, const Real& lam) {
  using std::sqrt;
  const Real Kl = K * lam;
  return (Kl + sqrt(Kl * Kl + Real(4) * Kp)) / Real(2);
}

template <class Real>
struct LandauRadii {
  Real T;
  Real r1;
  Real sigma1;
};

template <class Real>
LandauRadii<Real> landau(const Real& K, const Real& Kp, const Real& lam) {
  using std::log;
  if (K * lam < Real(1)) throw std::invalid_argument("landau radii require K*lam >= 1");
  LandauRadii<Real> out;
  out.T = landau_T(K, Kp, lam);
  out.r1 = Real(1) / (Real(1) + out.T);
  // sigma1 = 1 + T ln(T r1); the T -> 0+ limit is 1 and ln(0) is never formed.
  out.sigma1 = out.T > Real(0) ? Real(1) + out.T * log(out.T * out.r1) : Real(1);
  return out;
}

template <class Real>
struct BlochRadius {
  Real t;
  Real rho;
};

/// t = 2K + (4K'-1)/(K + sqrt(K^2 + 4K')), rho from the expanded display
/// 1/sqrt2 + (sqrt2 K + (4K'-1)/(sqrt2 (K + sqrt(K^2+4K')))) ln(t/(1+t)).
template <class Real>
BlochRadius<Real> bloch_theorem3(const Real& K, const Real& Kp) {
  using std::log;
  using std::sqrt;
  const Real root = sqrt(K * K + Real(4) * Kp);
  const Real corr = (Real(4) * Kp - Real(1)) / (K + root);
  const Real s2 = sqrt(Real(2));
  BlochRadius<Real> out;
  out.t = Real(2) * K + corr;
  const Real coeff = s2 * K + (Real(4) * Kp - Real(1)) / (s2 * (K + root));
  out.rho = Real(1) / s2 + coeff * log(out.t / (Real(1) + out.t));
  return out;
}

/// t(K,K') = 2K + (4K'(K+K')-1)/(K + sqrt(K^2 + 4K'(K+K'))),
/// rho = (1 + t ln(t/(1+t))) / sqrt(2(K+K')).
template <class Real>
BlochRadius<Real> bloch_corollary1(const Real& K, const Real& Kp) {
  using std::log;
  using std::sqrt;
  const Real KK = Kp * (K + Kp);
  BlochRadius<Real> out;
  out.t = Real(2) * K + (Real(4) * KK - Real(1)) / (K + sqrt(K * K + Real(4) * KK));
  out.rho = (Real(1) + out.t * log(out.t / (Real(1) + out.t))) / sqrt(Real(2) * (K + Kp));
  return out;
}

template <class Real>
struct ClassicalRadii {
  Real r0;
  Real R0;
};

template <class Real>
ClassicalRadii<Real> classical_landau(const Real& M) {
  using std::sqrt;
  if (M < Real(1)) throw std::invalid_argument("classical Landau radii require M >= 1");
  ClassicalRadii<Real> out;
  out.r0 = Real(1) / (M + sqrt(M * M - Real(1)));
  out.R0 = M * out.r0 * out.r0;
  return out;
}

}  // namespace formulas

/// psi(t) = 1 + t ln(t/(1+t)) in double, cancellation-free for large t.
double psi(double t);

struct LandauResult {
  double T;
  double r1;
  double sigma1;
};

enum class BlochKind { theorem3, corollary1 };

struct BlochBound {
  double t;
  double rho;
  BlochKind kind;
};

struct ClassicalLandau {
  double M;
  double r0;
  double R0;
};

/// Upper bound T/n on |a_n| + |b_n| for n >= 2.
double coeff_bound(int n, const EllipticityParams& params, const DistortionBound& lam);

LandauResult landau(const EllipticityParams& params, const DistortionBound& lam);

BlochBound bloch_theorem3(const EllipticityParams& params);

BlochBound bloch_corollary1(const EllipticityParams& params);

ClassicalLandau classical_landau(double M);

/// One literal inequality lhs < rhs (or lhs > rhs), with slack > 0 iff it holds.
struct InequalityCheck {
  double lhs;
  double rhs;
  double slack;
  bool holds;
};

/// The three inequalities stated in the remarks after the coefficient and
/// Landau theorems, evaluated exactly as printed:
///   correction:  2(K'-1)/(K lam + sqrt(K^2 lam^2 + 4K')) < sqrt(K')
///   r1:          r1 > 1/(K lam + sqrt(K'))
///   sigma1:      sigma1 > 1 + (K lam + sqrt K') ln((K lam + sqrt K')/(1 + K lam + sqrt K'))
struct RemarkInequalities {
  InequalityCheck correction;
  InequalityCheck r1;
  InequalityCheck sigma1;

  bool all_hold() const noexcept { return correction.holds && r1.holds && sigma1.holds; }
};

/// Requires lam > 1.
RemarkInequalities remark_inequalities(const EllipticityParams& params, const DistortionBound& lam);

const char* to_string(BlochKind kind) noexcept;

}  // namespace elliptica
