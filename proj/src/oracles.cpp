#include "elliptica/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "elliptica/pair_scan.hpp"

namespace elliptica {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kUnresolvedCap = 1 << 16;
constexpr int kNewtonAttempts = 256;
constexpr int kNewtonIterations = 60;
constexpr double kCollisionTol = 1e-12;
constexpr double kDistinctTol = 1e-6;
constexpr int kCurveOversampling = 32;
constexpr int kNetRings = 16;
constexpr int kNetPerRing = 64;
constexpr double kWindingClearance = 2.0;

void require_radius(double r, const char* what) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument(std::string(what) + ": radius must lie in (0, 1)");
}

double grid_mesh(double r, const SamplingSpec& grid) {
  return std::max(r / grid.n_r(), kTwoPi * r / grid.n_theta());
}

// Sampled bound on |h''| + |g''| over the cell centers, doubled for safety.
double sampled_hessian(const EvaluableMap& f, std::span<const Complex> centers,
                       std::span<const Wirtinger> d0, double step, Execution exec) {
  const auto est = kernels::map<double>(exec, centers.size(), [&](std::size_t i) {
    double best = 0.0;
    for (const Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
      Complex z = centers[i] + step * dir;
      if (std::abs(z) >= 1.0) z = centers[i] - step * dir;
      const auto d1 = f.partials(z);
      best = std::max(best, (std::abs(d1.dz - d0[i].dz) + std::abs(d1.dzbar - d0[i].dzbar)) / step);
    }
    return best;
  });
  return 2.0 * (est.empty() ? 0.0 : *std::max_element(est.begin(), est.end()));
}

struct CellGrid {
  std::vector<kernels::Cell> cells;
  double hessian;
  double lipschitz;
  bool majorant;
};

CellGrid build_cells(const EvaluableMap& f, double r, const SamplingSpec& grid, Execution exec) {
  const int n_r = grid.n_r();
  const int n_t = grid.n_theta();
  const std::size_t n = static_cast<std::size_t>(n_r) * n_t;

  std::vector<Complex> centers(n);
  std::vector<double> radii(n);
  for (int i = 0; i < n_r; ++i) {
    const double r0 = r * i / n_r;
    const double r1 = r * (i + 1) / n_r;
    const double rm = 0.5 * (r0 + r1);
    for (int j = 0; j < n_t; ++j) {
      const double t0 = kTwoPi * j / n_t;
      const double t1 = kTwoPi * (j + 1) / n_t;
      const Complex c = std::polar(rm, 0.5 * (t0 + t1));
      double delta = 0.0;
      for (const Complex corner : {std::polar(r0, t0), std::polar(r0, t1), std::polar(r1, t0), std::polar(r1, t1)}) {
        delta = std::max(delta, std::abs(corner - c));
      }
      const auto k = static_cast<std::size_t>(i) * n_t + j;
      centers[k] = c;
      radii[k] = delta;
    }
  }

  struct Sample {
    Complex image;
    Wirtinger d;
  };
  const auto samples = kernels::map<Sample>(exec, n, [&](std::size_t k) {
    return Sample{f.value(centers[k]), f.partials(centers[k])};
  });

  CellGrid out{{}, 0.0, 0.0, f.has_majorant()};
  if (out.majorant) {
    out.hessian = f.majorant(2, r);
  } else {
    std::vector<Wirtinger> d0(n);
    for (std::size_t k = 0; k < n; ++k) d0[k] = samples[k].d;
    out.hessian = sampled_hessian(f, centers, d0, 0.25 * grid_mesh(r, grid), exec);
  }

  out.cells.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = std::abs(samples[k].d.dz);
    const double b = std::abs(samples[k].d.dzbar);
    const double lam = std::abs(a - b);
    const double local = out.hessian > 0.0 ? lam / out.hessian : std::numeric_limits<double>::infinity();
    const double lip = a + b + out.hessian * radii[k];
    out.cells[k] = {centers[k], radii[k], samples[k].image, local, lip};
    out.lipschitz = std::max(out.lipschitz, lip);
  }
  return out;
}

// Newton's method on f(z) = f(z1) started from `start`.
std::optional<Complex> confirm_collision(const EvaluableMap& f, Complex z1, Complex start, double r) {
  const Complex target = f.value(z1);
  const double limit = 0.5 * (1.0 + r);
  Complex z = start;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const Complex res = f.value(z) - target;
    if (std::abs(res) < 1e-15) break;
    const auto d = f.partials(z);
    const Complex cx = d.dz + d.dzbar;
    const Complex cy = Complex(0.0, 1.0) * (d.dz - d.dzbar);
    const double det = cx.real() * cy.imag() - cy.real() * cx.imag();
    if (!std::isfinite(det) || det == 0.0) return std::nullopt;
    Complex step((-res.real() * cy.imag() + cy.real() * res.imag()) / det,
                 (-cx.real() * res.imag() + res.real() * cx.imag()) / det);
    int halvings = 0;
    while (std::abs(z + step) >= limit && halvings++ < 60) step *= 0.5;
    if (std::abs(z + step) >= limit) return std::nullopt;
    z += step;
  }
  if (std::abs(f.value(z) - target) < kCollisionTol && std::abs(z - z1) > kDistinctTol && std::abs(z) < r) {
    return z;
  }
  return std::nullopt;
}

double segment_distance(Complex p, Complex q, Complex w) {
  const Complex d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(w - p);
  const double t = std::clamp(((w - p) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p + t * d - w);
}

struct Curve {
  std::vector<Complex> points;
  double deviation;  // bound on the distance from the true arc to its chord
  double mesh;
};

Curve sample_curve(const EvaluableMap& f, double r, int n, Execution exec) {
  Curve c;
  c.points = kernels::map<Complex>(exec, static_cast<std::size_t>(n),
                                   [&](std::size_t k) { return f.value(std::polar(r, kTwoPi * k / n)); });
  const double dt = kTwoPi / n;
  double chord = 0.0;
  double second = 0.0;
  for (int k = 0; k < n; ++k) {
    const Complex prev = c.points[(k + n - 1) % n];
    const Complex cur = c.points[k];
    const Complex next = c.points[(k + 1) % n];
    chord = std::max(chord, std::abs(next - cur));
    second = std::max(second, std::abs(next - 2.0 * cur + prev));
  }
  if (f.has_majorant()) {
    c.deviation = dt * dt / 8.0 * (r * r * f.majorant(2, r) + r * f.majorant(1, r));
  } else {
    c.deviation = 2.0 * second / 8.0;
  }
  c.mesh = chord + c.deviation;
  return c;
}

double polyline_distance(std::span<const Complex> pts, Complex w) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = pts.size();
  for (std::size_t k = 0; k < n; ++k) best = std::min(best, segment_distance(pts[k], pts[(k + 1) % n], w));
  return best;
}

double sample_distance(std::span<const Complex> pts, Complex w) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) best = std::min(best, std::abs(p - w));
  return best;
}

}  // namespace

const char* to_string(VerdictStatus status) noexcept {
  switch (status) {
    case VerdictStatus::certified: return "certified";
    case VerdictStatus::refuted: return "refuted";
    case VerdictStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

OracleVerdict univalence_probe(const EvaluableMap& f, double r, const SamplingSpec& spec, Execution exec) {
  require_radius(r, "univalence_probe");
  if (spec.n_theta() < 2) throw std::invalid_argument("univalence_probe: n_theta must be at least 2");

  OracleVerdict verdict;
  SamplingSpec grid = spec;
  for (int round = 0;; ++round) {
    const auto cg = build_cells(f, r, grid, exec);
    const double mesh = grid_mesh(r, grid);
    auto& res = verdict.resolution;
    res = {grid.n_r(), grid.n_theta(), round, mesh, 2.0 * mesh, cg.lipschitz * mesh / 4.0,
           cg.lipschitz, cg.hessian, static_cast<long>(cg.cells.size()), cg.majorant};

    const auto scan = kernels::pair_scan(exec, cg.cells, kUnresolvedCap);
    if (scan.unresolved_count == 0 && scan.min_far_slack > 0.0) {
      verdict.status = VerdictStatus::certified;
      verdict.margin = scan.min_far_slack;
      verdict.note = "grid-certified";
      return verdict;
    }

    struct Candidate {
      bool coarse;
      double ratio;
      std::uint32_t i, j;
    };
    std::vector<Candidate> candidates;
    for (const auto& [i, j] : scan.unresolved) {
      if (i == j) continue;
      const auto& a = cg.cells[i];
      const auto& b = cg.cells[j];
      const double d = std::abs(a.center - b.center);
      if (d <= res.delta_sep) continue;
      const double gap = std::abs(a.image - b.image);
      candidates.push_back({gap >= res.eps_img, gap / d, i, j});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
      return std::tie(x.coarse, x.ratio, x.i, x.j) < std::tie(y.coarse, y.ratio, y.i, y.j);
    });
    if (candidates.size() > static_cast<std::size_t>(kNewtonAttempts)) candidates.resize(kNewtonAttempts);
    for (const auto& c : candidates) {
      const Complex z1 = cg.cells[c.i].center;
      if (const auto z2 = confirm_collision(f, z1, cg.cells[c.j].center, r)) {
        verdict.status = VerdictStatus::refuted;
        verdict.witness = {z1, *z2};
        verdict.margin = std::abs(f.value(z1) - f.value(*z2));
        verdict.note = "collision confirmed";
        return verdict;
      }
    }

    if (round >= spec.refinement_rounds()) {
      verdict.status = VerdictStatus::inconclusive;
      verdict.note = std::to_string(scan.unresolved_count) + " cell pairs unresolved";
      return verdict;
    }
    grid = grid.refined();
  }
}

OracleVerdict univalence_probe(const HarmonicMap& f, double r, const SamplingSpec& spec, Execution exec) {
  return univalence_probe(as_evaluable(f), r, spec, exec);
}

int winding_from_samples(std::span<const Complex> curve, Complex w) {
  double total = 0.0;
  const std::size_t n = curve.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = curve[k] - w;
    const Complex b = curve[(k + 1) % n] - w;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

WindingResult winding_number(const EvaluableMap& f, double r, Complex w, int n_theta) {
  require_radius(r, "winding_number");
  if (n_theta < 3) throw std::invalid_argument("winding_number: n_theta must be at least 3");
  const auto curve = sample_curve(f, r, n_theta, Execution::serial);
  WindingResult out{std::nullopt, sample_distance(curve.points, w), curve.mesh};
  if (out.min_distance > kWindingClearance * curve.mesh) out.winding = winding_from_samples(curve.points, w);
  return out;
}

WindingResult winding_number(const HarmonicMap& f, double r, Complex w, int n_theta) {
  return winding_number(as_evaluable(f), r, w, n_theta);
}

OracleVerdict coverage_probe(const EvaluableMap& f, double r, double rho, const SamplingSpec& spec,
                             Execution exec) {
  require_radius(r, "coverage_probe");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("coverage_probe: rho must be positive");
  if (std::abs(f.value(0.0)) > 1e-9) throw std::invalid_argument("coverage_probe: requires f(0) = 0");

  std::vector<Complex> net{0.0};
  for (int k = 1; k <= kNetRings; ++k) {
    for (int m = 0; m < kNetPerRing; ++m) net.push_back(std::polar(rho * k / kNetRings * (1.0 - 1e-9), kTwoPi * m / kNetPerRing));
  }

  OracleVerdict verdict;
  for (int round = 0;; ++round) {
    const int n = kCurveOversampling * spec.n_theta() * (1 << round);
    const auto curve = sample_curve(f, r, n, exec);
    auto& res = verdict.resolution;
    res = Resolution{};
    res.n_r = kNetRings;
    res.n_theta = n;
    res.rounds_used = round;
    res.mesh = curve.mesh;
    res.samples = n + static_cast<long>(net.size());
    res.majorant = f.has_majorant();
    if (res.majorant) res.hessian_bound = f.majorant(2, r);

    const double clearance = polyline_distance(curve.points, 0.0) - curve.deviation;
    if (clearance > rho && winding_from_samples(curve.points, 0.0) >= 1) {
      verdict.status = VerdictStatus::certified;
      verdict.margin = clearance - rho;
      verdict.note = "grid-certified";
      return verdict;
    }

    const auto uncovered = kernels::map<char>(exec, net.size(), [&](std::size_t i) -> char {
      if (sample_distance(curve.points, net[i]) <= kWindingClearance * curve.mesh) return 0;
      return winding_from_samples(curve.points, net[i]) == 0 ? 1 : 0;
    });
    const auto hit = std::find(uncovered.begin(), uncovered.end(), 1);
    if (hit != uncovered.end()) {
      const Complex w = net[static_cast<std::size_t>(hit - uncovered.begin())];
      verdict.status = VerdictStatus::refuted;
      verdict.witness = {w};
      verdict.margin = sample_distance(curve.points, w);
      verdict.note = "net point outside the image";
      return verdict;
    }

    if (round >= spec.refinement_rounds()) {
      verdict.status = VerdictStatus::inconclusive;
      verdict.note = "boundary curve too close to the disk";
      return verdict;
    }
  }
}

OracleVerdict coverage_probe(const HarmonicMap& f, double r, double rho, const SamplingSpec& spec,
                             Execution exec) {
  return coverage_probe(as_evaluable(f), r, rho, spec, exec);
}

}  // namespace elliptica
