#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "elliptica/harmonic_map.hpp"
#include "elliptica/kernels.hpp"

namespace elliptica::kernels {

/// One sampling cell of the univalence certificate.
///
/// Every point of the cell lies within `radius` of `center`. f is injective on
/// the ball B(center, local_radius) (the derivative cannot drift far enough
/// from its value at the center to degenerate there), and `lipschitz` bounds
/// |f(z) - image| / |z - center| on the cell.
struct Cell {
  Complex center;
  double radius;
  Complex image;
  double local_radius;
  double lipschitz;
};

using CellPair = std::pair<std::uint32_t, std::uint32_t>;

/// A pair of cells (i <= j) is resolved when both cells fit in one injectivity
/// ball, or when their images are farther apart than the Lipschitz spread
/// L_i r_i + L_j r_j. Everything else is unresolved.
struct PairScanResult {
  std::vector<CellPair> unresolved;  ///< lexicographically first pairs, up to the cap
  std::size_t unresolved_count = 0;  ///< total, including pairs past the cap
  double min_far_slack = 0.0;        ///< min image gap minus spread over in-scope far pairs
  double scope = 0.0;                ///< image distance beyond which a pair is resolved outright
};

/// Reference implementation: all pairs, O(n^2).
PairScanResult pair_scan_serial(std::span<const Cell> cells, std::size_t cap);

/// Image-space bucketing plus OpenMP; returns exactly what the serial scan does.
PairScanResult pair_scan_parallel(std::span<const Cell> cells, std::size_t cap);

PairScanResult pair_scan(Execution exec, std::span<const Cell> cells, std::size_t cap);

}  // namespace elliptica::kernels
