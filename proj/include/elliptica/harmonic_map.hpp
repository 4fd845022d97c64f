#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "elliptica/params.hpp"

namespace elliptica {

using Complex = std::complex<double>;

/// Wirtinger derivatives (f_z, f_zbar) at a point.
struct Wirtinger {
  Complex dz;
  Complex dzbar;
};

/// Truncated planar harmonic mapping f = h + conj(g) on the unit disk,
///
///   h(z) = sum_{n=0}^{N} a_n z^n,   g(z) = sum_{n=1}^{N} b_n z^n.
///
/// `analytic()[n]` is a_n and `antianalytic()[n - 1]` is b_n. The tail bound is a
/// certified bound on sum_{n>N} (|a_n| + |b_n|) r_ref^n for the untruncated map,
/// zero when the map is a polynomial. Values are immutable after construction.
class HarmonicMap {
 public:
  HarmonicMap(std::vector<Complex> analytic, std::vector<Complex> antianalytic,
              double tail_bound = 0.0, double reference_radius = 0.5);

  static HarmonicMap identity();

  const std::vector<Complex>& analytic() const noexcept { return a_; }
  const std::vector<Complex>& antianalytic() const noexcept { return b_; }

  /// a_n, zero past the stored degree.
  Complex a(int n) const noexcept;
  /// b_n for n >= 1, zero past the stored degree.
  Complex b(int n) const noexcept;

  int degree() const noexcept { return degree_; }
  double tail_bound() const noexcept { return tail_bound_; }
  double reference_radius() const noexcept { return reference_radius_; }
  bool is_analytic() const noexcept;

 private:
  std::vector<Complex> a_;
  std::vector<Complex> b_;
  int degree_;
  double tail_bound_;
  double reference_radius_;
};

/// f(z), Horner from the top degree down. Throws std::domain_error for |z| >= 1.
Complex eval(const HarmonicMap& f, Complex z);

/// (f_z, f_zbar) = (h'(z), conj(g'(z))). Throws std::domain_error for |z| >= 1.
Wirtinger partials(const HarmonicMap& f, Complex z);

/// A(z) = f(z) - f(0) - f_z(0) z - f_zbar(0) conj(z).
HarmonicMap remainder_map(const HarmonicMap& f);

/// Drops coefficients past degree N and records the tail bound implied by the
/// coefficient estimate |a_n| + |b_n| <= T/n for (K,K')-elliptic maps with
/// lambda_f <= lam: T r^{N+1} / ((N+1)(1-r)) at r = r_ref.
HarmonicMap truncate_with_tail(const HarmonicMap& f, int N, const EllipticityParams& params,
                               const DistortionBound& lam, double r_ref);

/// Coefficient-wise sum. Tail bounds add; they must refer to the same radius
/// unless one of them is zero.
HarmonicMap operator+(const HarmonicMap& f, const HarmonicMap& g);

/// c * f for real c.
HarmonicMap scale(const HarmonicMap& f, double c);

/// z -> f(e^{i theta} z).
HarmonicMap precompose_rotation(const HarmonicMap& f, double theta);

/// z -> f(s z) for 0 < s <= 1.
HarmonicMap dilate(const HarmonicMap& f, double s);

/// sum_{n>=k} n!/(n-k)! (|a_n| + |b_n|) r^{n-k}: bounds sup_{|z|<=r} |h^(k)| + |g^(k)|.
double derivative_majorant(const HarmonicMap& f, int k, double r);

/// Anything the oracles can sample: a value, its Wirtinger derivatives, and
/// optionally a derivative majorant as above. Closures over composed maps
/// leave `majorant` empty and the oracles fall back to sampled estimates.
struct EvaluableMap {
  std::function<Complex(Complex)> value;
  std::function<Wirtinger(Complex)> partials;
  std::function<double(int, double)> majorant;

  bool has_majorant() const noexcept { return static_cast<bool>(majorant); }
};

EvaluableMap as_evaluable(const HarmonicMap& f);

}  // namespace elliptica
