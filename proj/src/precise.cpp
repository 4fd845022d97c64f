#include "elliptica/precise.hpp"

#include <cmath>
#include <stdexcept>

namespace elliptica {

namespace {

struct Acc {
  Precise re;
  Precise im;
};

// acc * (zr + i zi) + (cr + i ci)
void horner_step(Acc& acc, const Precise& zr, const Precise& zi, double cr, double ci) {
  Precise re = acc.re * zr - acc.im * zi + cr;
  Precise im = acc.re * zi + acc.im * zr + ci;
  acc.re = std::move(re);
  acc.im = std::move(im);
}

}  // namespace

PreciseComplex eval_precise(const HarmonicMap& f, Complex z, unsigned digits10) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("harmonic map evaluated outside the unit disk");
  ScopedPrecision guard(digits10);
  const Precise zr = z.real();
  const Precise zi = z.imag();

  const auto& a = f.analytic();
  Acc h{Precise(0), Precise(0)};
  for (auto it = a.rbegin(); it != a.rend(); ++it) horner_step(h, zr, zi, it->real(), it->imag());

  const auto& b = f.antianalytic();
  Acc g{Precise(0), Precise(0)};
  for (auto it = b.rbegin(); it != b.rend(); ++it) horner_step(g, zr, zi, it->real(), it->imag());
  horner_step(g, zr, zi, 0.0, 0.0);  // g(z) = z * (b_1 + b_2 z + ...)

  return {h.re + g.re, h.im - g.im};
}

}  // namespace elliptica
