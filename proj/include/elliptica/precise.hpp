#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "elliptica/harmonic_map.hpp"

namespace elliptica {

/// Runtime-precision real used for the shadow computations in identity checks.
using Precise = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPreciseDigits = 50;

/// Sets the default decimal precision of newly created Precise values for the
/// lifetime of the guard (thread-local in Boost.Multiprecision).
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10 = kDefaultPreciseDigits)
      : previous_(Precise::default_precision()) {
    Precise::default_precision(digits10);
  }
  ~ScopedPrecision() { Precise::default_precision(previous_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

struct PreciseComplex {
  Precise re;
  Precise im;
};

/// f(z) with every operation carried at `digits10` decimal digits; the double
/// coefficients and z are taken as exact inputs.
PreciseComplex eval_precise(const HarmonicMap& f, Complex z, unsigned digits10 = kDefaultPreciseDigits);

}  // namespace elliptica
