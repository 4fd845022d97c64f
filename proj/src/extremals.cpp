#include "elliptica/extremals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elliptica {

namespace {

constexpr double kFnReferenceRadius = 0.5;

HarmonicMap build_series(int n, double lam, int N, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + " requires n >= 2");
  if (!std::isfinite(lam) || lam < 1.0) throw std::invalid_argument(std::string(what) + " requires parameter >= 1");
  if (N < n) throw std::invalid_argument(std::string(what) + " requires truncation N >= n");

  std::vector<Complex> a(static_cast<std::size_t>(N) + 1);
  a[1] = 1.0;
  const double excess = lam * lam - 1.0;
  double lam_k = lam;
  for (int k = 1;; ++k) {
    const long deg = static_cast<long>(k) * (n - 1) + 1;
    if (deg > N) break;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    a[static_cast<std::size_t>(deg)] = sign * excess / (static_cast<double>(deg) * lam_k);
    lam_k *= lam;
  }

  // |a_m| <= T/m with T = lam - 1/lam, hence the geometric tail estimate.
  const double T = lam - 1.0 / lam;
  const double r = kFnReferenceRadius;
  const double tail = T * std::pow(r, N + 1) / ((N + 1) * (1.0 - r));
  return HarmonicMap(std::move(a), {}, tail, r);
}

}  // namespace

ExtremalFamily parse_extremal_family(const std::string& name) {
  if (name == "Fn") return ExtremalFamily::Fn_theorem1;
  if (name == "fn") return ExtremalFamily::fn_lemmaA;
  if (name == "classical") return ExtremalFamily::classical_landau;
  throw std::invalid_argument("unknown extremal family '" + name + "' (expected Fn, fn or classical)");
}

const char* to_string(ExtremalFamily family) noexcept {
  switch (family) {
    case ExtremalFamily::Fn_theorem1: return "Fn";
    case ExtremalFamily::fn_lemmaA: return "fn";
    case ExtremalFamily::classical_landau: return "classical";
  }
  return "?";
}

HarmonicMap build_Fn(int n, double lam, int N) { return build_series(n, lam, N, "build_Fn"); }

HarmonicMap build_fn_lemmaA(int n, double Lambda, int N) {
  return build_series(n, Lambda, N, "build_fn_lemmaA");
}

HarmonicMap build_classical(double M, int N) {
  if (!std::isfinite(M) || M <= 1.0) throw std::invalid_argument("classical extremal requires M > 1");
  if (N < 2) throw std::invalid_argument("classical extremal requires N >= 2");
  std::vector<Complex> a(static_cast<std::size_t>(N) + 1);
  double prev = 0.0;
  for (int n = 1; n <= N; ++n) {
    const double c = n == 1 ? M : (n == 2 ? -M * M : 0.0);
    prev = (c + prev) / M;
    a[static_cast<std::size_t>(n)] = prev;
  }
  // |a_n| = (M^2-1) M^{1-n} for n >= 2: the tail is geometric with ratio r/M.
  const double r = 0.5;
  const double q = r / M;
  const double tail = (M * M - 1.0) * M * std::pow(q, N + 1) / (1.0 - q);
  return HarmonicMap(std::move(a), {}, tail, r);
}

HarmonicMap build(const ExtremalSpec& spec, int N) {
  switch (spec.family) {
    case ExtremalFamily::Fn_theorem1: return build_Fn(spec.n, spec.parameter, N);
    case ExtremalFamily::fn_lemmaA: return build_fn_lemmaA(spec.n, spec.parameter, N);
    case ExtremalFamily::classical_landau: return build_classical(spec.parameter, N);
  }
  throw std::invalid_argument("unknown extremal family");
}

Complex classical_extremal_value(double M, Complex z) {
  return M * z * (1.0 - M * z) / (M - z);
}

int fn_degree_for_accuracy(int n, double lam, double radius, double tol) {
  if (lam <= 1.0) return n;
  // F' = 1 + (lam^2-1) sum_{k>=1} (-1)^{k+1} (w/lam)^k with w = z^{n-1}.
  const double q = std::pow(radius, n - 1) / lam;
  const double excess = lam * lam - 1.0;
  int k = 1;
  while (excess * std::pow(q, k + 1) / (1.0 - q) > tol && k < (1 << 20)) ++k;
  return std::max(n, k * (n - 1) + 1);
}

}  // namespace elliptica
