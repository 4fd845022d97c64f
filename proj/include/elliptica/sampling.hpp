#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "elliptica/harmonic_map.hpp"

namespace elliptica {

/// Polar sampling resolution: n_r radii times n_theta angles, plus the number of
/// refinement rounds an oracle may spend before giving up.
class SamplingSpec {
 public:
  SamplingSpec(int n_r, int n_theta, int refinement_rounds);

  /// 64 x 256, 3 rounds: distortion and ellipticity sampling.
  static SamplingSpec distortion_default() { return {64, 256, 3}; }
  /// 48 x 192, 3 rounds: univalence and coverage oracles.
  static SamplingSpec oracle_default() { return {48, 192, 3}; }

  /// Parses "n_r,n_theta" as given on the command line.
  static SamplingSpec parse_grid(const std::string& text, int refinement_rounds = 3);

  int n_r() const noexcept { return n_r_; }
  int n_theta() const noexcept { return n_theta_; }
  int refinement_rounds() const noexcept { return refinement_rounds_; }

  SamplingSpec refined() const { return {2 * n_r_, 2 * n_theta_, refinement_rounds_}; }

 private:
  int n_r_;
  int n_theta_;
  int refinement_rounds_;
};

/// Origin first, then rings at radius R (i+1)/n_r for i = 0..n_r-1, each with
/// n_theta equally spaced angles starting at 0. Index order is lexicographic
/// in (ring, angle).
std::vector<Complex> polar_grid(double radius, int n_r, int n_theta);

/// Radical inverse of `index` in `base` (van der Corput), index >= 1 gives (0,1).
double halton(std::size_t index, unsigned base);

}  // namespace elliptica
