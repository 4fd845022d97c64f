#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace elliptica {

/// (K, K') pair of an elliptic mapping: ||D_f||^2 <= K J_f + K' almost everywhere.
class EllipticityParams {
 public:
  EllipticityParams(double K, double Kp) : K_(K), Kp_(Kp) {
    if (!std::isfinite(K) || K < 1.0) {
      throw std::invalid_argument("ellipticity parameter K must satisfy K >= 1 (got " +
                                  std::to_string(K) + ")");
    }
    if (!std::isfinite(Kp) || Kp < 0.0) {
      throw std::invalid_argument("ellipticity parameter K' must satisfy K' >= 0 (got " +
                                  std::to_string(Kp) + ")");
    }
  }

  double K() const noexcept { return K_; }
  double Kp() const noexcept { return Kp_; }

  friend bool operator==(const EllipticityParams&, const EllipticityParams&) = default;

 private:
  double K_;
  double Kp_;
};

/// Upper bound on the minimum length distortion, lambda_f(z) <= lam on the disk.
class DistortionBound {
 public:
  explicit DistortionBound(double lam) : lam_(lam) {
    if (!std::isfinite(lam) || lam < 1.0) {
      throw std::invalid_argument("distortion bound lam must satisfy lam >= 1 (got " +
                                  std::to_string(lam) + ")");
    }
  }

  double value() const noexcept { return lam_; }

 private:
  double lam_;
};

}  // namespace elliptica
