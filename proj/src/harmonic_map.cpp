#include "elliptica/harmonic_map.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "elliptica/constants.hpp"

namespace elliptica {

namespace {

void require_finite(const std::vector<Complex>& coeffs, const char* which) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!std::isfinite(coeffs[i].real()) || !std::isfinite(coeffs[i].imag())) {
      throw std::invalid_argument(std::string("non-finite ") + which + " coefficient at index " +
                                  std::to_string(i));
    }
  }
}

void require_in_disk(Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("harmonic map evaluated outside the unit disk (|z| = " +
                            std::to_string(std::abs(z)) + ")");
  }
}

// sum_{n} c_n z^n for the stored coefficient run, highest degree first.
Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

HarmonicMap::HarmonicMap(std::vector<Complex> analytic, std::vector<Complex> antianalytic,
                         double tail_bound, double reference_radius)
    : a_(std::move(analytic)),
      b_(std::move(antianalytic)),
      tail_bound_(tail_bound),
      reference_radius_(reference_radius) {
  require_finite(a_, "analytic");
  require_finite(b_, "anti-analytic");
  if (!(tail_bound_ >= 0.0) || !std::isfinite(tail_bound_)) {
    throw std::invalid_argument("tail bound must be finite and nonnegative");
  }
  if (!(reference_radius_ > 0.0 && reference_radius_ < 1.0)) {
    throw std::invalid_argument("reference radius must lie in (0, 1)");
  }
  // Pad so that a_0, a_1 always exist and both runs reach the common degree.
  degree_ = std::max<int>({1, static_cast<int>(a_.size()) - 1, static_cast<int>(b_.size())});
  a_.resize(static_cast<std::size_t>(degree_) + 1);
  if (!b_.empty()) b_.resize(static_cast<std::size_t>(degree_));
}

HarmonicMap HarmonicMap::identity() { return HarmonicMap({0.0, 1.0}, {}); }

Complex HarmonicMap::a(int n) const noexcept {
  return n >= 0 && n < static_cast<int>(a_.size()) ? a_[static_cast<std::size_t>(n)] : Complex{};
}

Complex HarmonicMap::b(int n) const noexcept {
  return n >= 1 && n <= static_cast<int>(b_.size()) ? b_[static_cast<std::size_t>(n - 1)] : Complex{};
}

bool HarmonicMap::is_analytic() const noexcept {
  return std::all_of(b_.begin(), b_.end(), [](Complex c) { return c == Complex{}; });
}

Complex eval(const HarmonicMap& f, Complex z) {
  require_in_disk(z);
  const Complex h = horner(f.analytic(), z);
  if (f.antianalytic().empty()) return h;
  const Complex g = horner(f.antianalytic(), z) * z;
  return h + std::conj(g);
}

Wirtinger partials(const HarmonicMap& f, Complex z) {
  require_in_disk(z);
  const auto& a = f.analytic();
  Complex hp{0.0, 0.0};
  for (std::size_t n = a.size() - 1; n >= 1; --n) hp = hp * z + static_cast<double>(n) * a[n];

  const auto& b = f.antianalytic();
  Complex gp{0.0, 0.0};
  for (std::size_t n = b.size(); n >= 1; --n) gp = gp * z + static_cast<double>(n) * b[n - 1];
  return {hp, std::conj(gp)};
}

HarmonicMap remainder_map(const HarmonicMap& f) {
  auto a = f.analytic();
  auto b = f.antianalytic();
  a[0] = 0.0;
  a[1] = 0.0;
  if (!b.empty()) b[0] = 0.0;
  return HarmonicMap(std::move(a), std::move(b), f.tail_bound(), f.reference_radius());
}

HarmonicMap truncate_with_tail(const HarmonicMap& f, int N, const EllipticityParams& params,
                               const DistortionBound& lam, double r_ref) {
  if (!(r_ref > 0.0 && r_ref < 1.0)) throw std::invalid_argument("r_ref must lie in (0, 1)");
  if (N < 1) throw std::invalid_argument("truncation degree must be >= 1");

  auto a = f.analytic();
  auto b = f.antianalytic();
  bool drops = false;
  for (int n = N + 1; n <= f.degree(); ++n) drops = drops || f.a(n) != Complex{} || f.b(n) != Complex{};
  const bool was_exact = f.tail_bound() == 0.0;
  if (static_cast<int>(a.size()) > N + 1) a.resize(static_cast<std::size_t>(N) + 1);
  if (static_cast<int>(b.size()) > N) b.resize(static_cast<std::size_t>(N));

  double tail = 0.0;
  if (drops || !was_exact) {
    const double T = formulas::landau_T(params.K(), params.Kp(), lam.value());
    tail = T * std::pow(r_ref, N + 1) / ((N + 1) * (1.0 - r_ref));
  }
  return HarmonicMap(std::move(a), std::move(b), tail, r_ref);
}

HarmonicMap operator+(const HarmonicMap& f, const HarmonicMap& g) {
  double r_ref = f.reference_radius();
  if (f.tail_bound() == 0.0) {
    r_ref = g.reference_radius();
  } else if (g.tail_bound() != 0.0 && g.reference_radius() != f.reference_radius()) {
    throw std::invalid_argument("cannot add tail bounds taken at different reference radii");
  }
  const int N = std::max(f.degree(), g.degree());
  std::vector<Complex> a(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) a[static_cast<std::size_t>(n)] = f.a(n) + g.a(n);
  std::vector<Complex> b;
  if (!f.antianalytic().empty() || !g.antianalytic().empty()) {
    b.resize(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) b[static_cast<std::size_t>(n - 1)] = f.b(n) + g.b(n);
  }
  return HarmonicMap(std::move(a), std::move(b), f.tail_bound() + g.tail_bound(), r_ref);
}

HarmonicMap scale(const HarmonicMap& f, double c) {
  auto a = f.analytic();
  auto b = f.antianalytic();
  for (auto& x : a) x *= c;
  for (auto& x : b) x *= c;
  return HarmonicMap(std::move(a), std::move(b), std::abs(c) * f.tail_bound(), f.reference_radius());
}

HarmonicMap precompose_rotation(const HarmonicMap& f, double theta) {
  auto a = f.analytic();
  auto b = f.antianalytic();
  for (std::size_t n = 0; n < a.size(); ++n) a[n] *= std::polar(1.0, static_cast<double>(n) * theta);
  for (std::size_t n = 0; n < b.size(); ++n) b[n] *= std::polar(1.0, static_cast<double>(n + 1) * theta);
  return HarmonicMap(std::move(a), std::move(b), f.tail_bound(), f.reference_radius());
}

HarmonicMap dilate(const HarmonicMap& f, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("dilation factor must lie in (0, 1]");
  auto a = f.analytic();
  auto b = f.antianalytic();
  double p = 1.0;
  for (auto& x : a) {
    x *= p;
    p *= s;
  }
  p = s;
  for (auto& x : b) {
    x *= p;
    p *= s;
  }
  // sum_{n>N} c_n (s r)^n <= s^{N+1} sum_{n>N} c_n r^n
  const double tail = f.tail_bound() * std::pow(s, f.degree() + 1);
  return HarmonicMap(std::move(a), std::move(b), tail, f.reference_radius());
}

double derivative_majorant(const HarmonicMap& f, int k, double r) {
  if (k < 0) throw std::invalid_argument("derivative order must be nonnegative");
  double sum = 0.0;
  for (int n = f.degree(); n >= k; --n) {
    double falling = 1.0;
    for (int j = 0; j < k; ++j) falling *= n - j;
    const double mag = std::abs(f.a(n)) + (n >= 1 ? std::abs(f.b(n)) : 0.0);
    sum = sum * r + falling * mag;
  }
  return sum;
}

EvaluableMap as_evaluable(const HarmonicMap& f) {
  auto shared = std::make_shared<const HarmonicMap>(f);
  EvaluableMap m;
  m.value = [shared](Complex z) { return eval(*shared, z); };
  m.partials = [shared](Complex z) { return partials(*shared, z); };
  m.majorant = [shared](int k, double r) { return derivative_majorant(*shared, k, r); };
  return m;
}

}  // namespace elliptica
