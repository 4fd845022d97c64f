#include "elliptica/constants.hpp"

#include <cmath>

namespace elliptica {

double psi(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("psi(t) requires t > 0");
  if (t >= 16.0) {
    // psi(t) = sum_{k>=1} (-1)^{k+1} / ((k+1) t^k); 16^-14 is below double epsilon.
    double sum = 0.0;
    double power = 1.0 / t;
    double sign = 1.0;
    for (int k = 1; k <= 16; ++k) {
      sum += sign * power / (k + 1);
      power /= t;
      sign = -sign;
    }
    return sum;
  }
  return 1.0 - t * std::log1p(1.0 / t);
}

double coeff_bound(int n, const EllipticityParams& params, const DistortionBound& lam) {
  if (n < 2) throw std::invalid_argument("coeff_bound requires n >= 2");
  if (params.K() * lam.value() < 1.0) throw std::invalid_argument("coeff_bound requires K*lam >= 1");
  return formulas::landau_T(params.K(), params.Kp(), lam.value()) / n;
}

LandauResult landau(const EllipticityParams& params, const DistortionBound& lam) {
  const auto r = formulas::landau(params.K(), params.Kp(), lam.value());
  // 1 + T ln(T r1) cancels for large T; psi(T) is the same quantity without it.
  return {r.T, r.r1, r.T > 0.0 ? psi(r.T) : 1.0};
}

BlochBound bloch_theorem3(const EllipticityParams& params) {
  const auto r = formulas::bloch_theorem3(params.K(), params.Kp());
  return {r.t, r.rho, BlochKind::theorem3};
}

BlochBound bloch_corollary1(const EllipticityParams& params) {
  const auto r = formulas::bloch_corollary1(params.K(), params.Kp());
  return {r.t, r.rho, BlochKind::corollary1};
}

ClassicalLandau classical_landau(double M) {
  if (!std::isfinite(M) || M < 1.0) {
    throw std::invalid_argument("classical Landau radii require M >= 1");
  }
  const auto r = formulas::classical_landau(M);
  return {M, r.r0, r.R0};
}

RemarkInequalities remark_inequalities(const EllipticityParams& params, const DistortionBound& lam) {
  if (!(lam.value() > 1.0)) throw std::invalid_argument("remark inequalities require lam > 1");
  const double K = params.K();
  const double Kp = params.Kp();
  const double Kl = K * lam.value();
  const double sqrtKp = std::sqrt(Kp);

  RemarkInequalities out{};
  const double corr = 2.0 * (Kp - 1.0) / (Kl + std::sqrt(Kl * Kl + 4.0 * Kp));
  out.correction = {corr, sqrtKp, sqrtKp - corr, corr < sqrtKp};

  const auto radii = landau(params, lam);
  const double older = Kl + sqrtKp;
  const double r1_rhs = 1.0 / older;
  out.r1 = {radii.r1, r1_rhs, radii.r1 - r1_rhs, radii.r1 > r1_rhs};

  const double sigma = 1.0 + older * std::log(older / (1.0 + older));
  out.sigma1 = {radii.sigma1, sigma, radii.sigma1 - sigma, radii.sigma1 > sigma};
  return out;
}

const char* to_string(BlochKind kind) noexcept {
  return kind == BlochKind::theorem3 ? "theorem3" : "corollary1";
}

}  // namespace elliptica
