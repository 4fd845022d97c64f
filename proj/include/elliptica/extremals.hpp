#pragma once

#include <string>

#include "elliptica/harmonic_map.hpp"

namespace elliptica {

inline constexpr int kDefaultTruncation = 64;

enum class ExtremalFamily { Fn_theorem1, fn_lemmaA, classical_landau };

struct ExtremalSpec {
  ExtremalFamily family;
  int n = 2;             ///< unused for the classical family
  double parameter = 1;  ///< lam, Lambda, or M depending on the family
};

ExtremalFamily parse_extremal_family(const std::string& name);
const char* to_string(ExtremalFamily family) noexcept;

/// Coefficient-equality extremal for the coefficient estimate,
///   F_n(z) = z + (lam^2-1)/(n lam) z^n + sum_{k>=2} (-1)^{k+1}(lam^2-1)/((kn-k+1) lam^k) z^{kn-k+1},
/// built from the expanded series through degree N. The recorded tail bound
/// is taken at r_ref = 1/2.
HarmonicMap build_Fn(int n, double lam, int N = kDefaultTruncation);

/// Same series with Lambda in place of lam.
HarmonicMap build_fn_lemmaA(int n, double Lambda, int N = kDefaultTruncation);

/// Power series of M z (1 - M z)/(M - z) through degree N, obtained from the
/// long-division recurrence M a_n - a_{n-1} = c_n of (M - z) f = M z - M^2 z^2.
HarmonicMap build_classical(double M, int N = kDefaultTruncation);

HarmonicMap build(const ExtremalSpec& spec, int N = kDefaultTruncation);

/// Direct rational evaluation of the classical extremal.
Complex classical_extremal_value(double M, Complex z);

/// Smallest truncation degree for which the dropped part of F_n' (equivalently
/// f_n') is below `tol` on |z| <= radius.
int fn_degree_for_accuracy(int n, double lam, double radius, double tol);

}  // namespace elliptica
