#include "elliptica/pair_scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include <omp.h>

namespace elliptica::kernels {

namespace {

enum class PairClass { local, far, unresolved };

struct Classified {
  PairClass kind;
  double image_gap;
  double slack;
};

Classified classify(const Cell& a, const Cell& b, bool same) {
  if (same) {
    return a.radius < a.local_radius ? Classified{PairClass::local, 0.0, 0.0}
                                     : Classified{PairClass::unresolved, 0.0, 0.0};
  }
  const double d = std::abs(a.center - b.center);
  const bool in_a = a.radius < a.local_radius && d + b.radius < a.local_radius;
  const bool in_b = b.radius < b.local_radius && d + a.radius < b.local_radius;
  if (in_a || in_b) return {PairClass::local, 0.0, 0.0};
  const double gap = std::abs(a.image - b.image);
  const double spread = a.lipschitz * a.radius + b.lipschitz * b.radius;
  if (gap > spread) return {PairClass::far, gap, gap - spread};
  return {PairClass::unresolved, gap, 0.0};
}

// Pairs whose images are farther apart than this are resolved without looking:
// no spread L_i r_i + L_j r_j can reach it.
double scope_of(std::span<const Cell> cells) {
  double m = 0.0;
  for (const auto& c : cells) m = std::max(m, c.lipschitz * c.radius);
  return 2.0 * m;
}

void finish(PairScanResult& out, std::size_t cap) {
  std::sort(out.unresolved.begin(), out.unresolved.end());
  if (out.unresolved.size() > cap) out.unresolved.resize(cap);
}

}  // namespace

PairScanResult pair_scan_serial(std::span<const Cell> cells, std::size_t cap) {
  PairScanResult out;
  out.scope = scope_of(cells);
  out.min_far_slack = out.scope;
  bool recording = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i; j < cells.size(); ++j) {
      const auto c = classify(cells[i], cells[j], i == j);
      if (c.kind == PairClass::unresolved) {
        ++out.unresolved_count;
        if (recording) out.unresolved.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      } else if (c.kind == PairClass::far && c.image_gap <= out.scope) {
        out.min_far_slack = std::min(out.min_far_slack, c.slack);
      }
    }
    if (out.unresolved.size() >= cap) recording = false;
  }
  finish(out, cap);
  return out;
}

PairScanResult pair_scan_parallel(std::span<const Cell> cells, std::size_t cap) {
  PairScanResult out;
  out.scope = scope_of(cells);
  out.min_far_slack = out.scope;
  const std::size_t n = cells.size();
  if (n == 0) return out;

  // Buckets slightly wider than the scope, so any in-scope pair sits in
  // neighbouring buckets regardless of rounding in the division.
  const double side = out.scope > 0.0 ? 1.001 * out.scope : 1.0;
  struct Keyed {
    std::int64_t ix, iy;
    std::uint32_t index;
  };
  std::vector<Keyed> keyed(n);
  for (std::size_t i = 0; i < n; ++i) {
    keyed[i] = {static_cast<std::int64_t>(std::floor(cells[i].image.real() / side)),
                static_cast<std::int64_t>(std::floor(cells[i].image.imag() / side)),
                static_cast<std::uint32_t>(i)};
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.ix, a.iy, a.index) < std::tie(b.ix, b.iy, b.index);
  });
  std::vector<std::int64_t> cell_ix(n), cell_iy(n);
  for (const auto& k : keyed) {
    cell_ix[k.index] = k.ix;
    cell_iy[k.index] = k.iy;
  }
  auto bucket_range = [&](std::int64_t ix, std::int64_t iy) {
    auto lo = std::lower_bound(keyed.begin(), keyed.end(), std::pair{ix, iy}, [](const Keyed& k, const auto& key) {
      return std::tie(k.ix, k.iy) < std::tie(key.first, key.second);
    });
    auto hi = lo;
    while (hi != keyed.end() && hi->ix == ix && hi->iy == iy) ++hi;
    return std::pair{lo, hi};
  };

  std::size_t total = 0;
  double min_slack = out.scope;
  std::vector<CellPair> merged;
#pragma omp parallel reduction(+ : total) reduction(min : min_slack)
  {
    std::vector<CellPair> local;
    bool recording = true;
#pragma omp for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
      const auto i = static_cast<std::size_t>(k);
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
          const auto [lo, hi] = bucket_range(cell_ix[i] + dx, cell_iy[i] + dy);
          for (auto it = lo; it != hi; ++it) {
            const std::size_t j = it->index;
            if (j < i) continue;
            const auto c = classify(cells[i], cells[j], i == j);
            if (c.kind == PairClass::unresolved) {
              ++total;
              if (recording) local.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            } else if (c.kind == PairClass::far && c.image_gap <= out.scope) {
              min_slack = std::min(min_slack, c.slack);
            }
          }
        }
      }
      if (local.size() >= cap) recording = false;
    }
#pragma omp critical(elliptica_pair_merge)
    merged.insert(merged.end(), local.begin(), local.end());
  }
  out.unresolved = std::move(merged);
  out.unresolved_count = total;
  out.min_far_slack = min_slack;
  finish(out, cap);
  return out;
}

PairScanResult pair_scan(Execution exec, std::span<const Cell> cells, std::size_t cap) {
  return exec == Execution::serial ? pair_scan_serial(cells, cap) : pair_scan_parallel(cells, cap);
}

}  // namespace elliptica::kernels
