#include "elliptica/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elliptica {

namespace {

void require_region(double region_radius) {
  if (!(region_radius > 0.0 && region_radius < 1.0)) {
    throw std::domain_error("sampling region radius must lie in (0, 1)");
  }
}

double grid_resolution(double radius, const SamplingSpec& grid) {
  return std::max(radius / grid.n_r(), 2.0 * std::numbers::pi * radius / grid.n_theta());
}

double margin_at(const DistortionProfile& p, const EllipticityParams& params) {
  return params.K() * p.jacobian + params.Kp() - p.op_norm_sq;
}

constexpr int kHaltonPerRound = 64;

}  // namespace

DistortionProfile profile_from(const Wirtinger& d) noexcept {
  const double a = std::abs(d.dz);
  const double b = std::abs(d.dzbar);
  const double big = a + b;
  return {big, std::abs(a - b), a * a - b * b, big * big};
}

DistortionProfile profile(const HarmonicMap& f, Complex z) { return profile_from(partials(f, z)); }

DistortionProfile profile(const EvaluableMap& f, Complex z) { return profile_from(f.partials(z)); }

const char* to_string(EvidenceKind kind) noexcept {
  return kind == EvidenceKind::evidence ? "evidence" : "certificate";
}

EllipticityReport ellipticity_check(const EvaluableMap& f, const EllipticityParams& params,
                                    double region_radius, const SamplingSpec& grid, Execution exec) {
  require_region(region_radius);
  const auto pts = polar_grid(region_radius, grid.n_r(), grid.n_theta());
  const auto profiles =
      kernels::map<DistortionProfile>(exec, pts.size(), [&](std::size_t i) { return profile(f, pts[i]); });

  const auto worst = kernels::argmin_serial(profiles.size(),
                                            [&](std::size_t i) { return margin_at(profiles[i], params); });
  double min_abs_j = std::abs(profiles[0].jacobian);
  bool sense_preserving = true;
  for (const auto& p : profiles) {
    min_abs_j = std::min(min_abs_j, std::abs(p.jacobian));
    sense_preserving = sense_preserving && p.jacobian > 0.0;
  }

  EllipticityReport report{params,     worst.value, pts[worst.index], static_cast<long>(pts.size()),
                           sense_preserving, min_abs_j};

  // Halton refinement in shrinking disks around the current worst point.
  double radius = grid_resolution(region_radius, grid);
  std::size_t halton_index = 1;
  for (int round = 0; round < grid.refinement_rounds(); ++round, radius *= 0.5) {
    const Complex center = report.worst_point;
    for (int k = 0; k < kHaltonPerRound; ++k, ++halton_index) {
      const double u = halton(halton_index, 2);
      const double v = halton(halton_index, 3);
      const Complex z = center + std::polar(radius * std::sqrt(u), 2.0 * std::numbers::pi * v);
      if (std::abs(z) > region_radius) continue;
      const auto p = profile(f, z);
      ++report.sample_count;
      report.min_abs_jacobian = std::min(report.min_abs_jacobian, std::abs(p.jacobian));
      report.sense_preserving_everywhere_sampled =
          report.sense_preserving_everywhere_sampled && p.jacobian > 0.0;
      const double m = margin_at(p, params);
      if (m < report.min_margin) {
        report.min_margin = m;
        report.worst_point = z;
      }
    }
  }
  return report;
}

EllipticityReport ellipticity_check(const HarmonicMap& f, const EllipticityParams& params,
                                    double region_radius, const SamplingSpec& grid, Execution exec) {
  return ellipticity_check(as_evaluable(f), params, region_radius, grid, exec);
}

SupEstimate sup_lambda_min(const EvaluableMap& f, double region_radius, const SamplingSpec& grid,
                           Execution exec) {
  require_region(region_radius);
  const auto pts = polar_grid(region_radius, grid.n_r(), grid.n_theta());
  const auto best =
      kernels::argmax(exec, pts.size(), [&](std::size_t i) { return profile(f, pts[i]).lambda_min; });
  return {best.value, pts[best.index], grid_resolution(region_radius, grid)};
}

SupEstimate sup_lambda_min(const HarmonicMap& f, double region_radius, const SamplingSpec& grid,
                           Execution exec) {
  return sup_lambda_min(as_evaluable(f), region_radius, grid, exec);
}

}  // namespace elliptica
