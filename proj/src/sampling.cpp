#include "elliptica/sampling.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elliptica {

SamplingSpec::SamplingSpec(int n_r, int n_theta, int refinement_rounds)
    : n_r_(n_r), n_theta_(n_theta), refinement_rounds_(refinement_rounds) {
  if (n_r <= 0 || n_theta <= 0 || refinement_rounds <= 0) {
    throw std::invalid_argument("sampling spec entries must be positive");
  }
}

SamplingSpec SamplingSpec::parse_grid(const std::string& text, int refinement_rounds) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("grid must be given as n_r,n_theta");
  auto parse = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw std::invalid_argument("grid must be given as n_r,n_theta (got '" + text + "')");
    }
    return v;
  };
  const std::string_view view(text);
  return {parse(view.substr(0, comma)), parse(view.substr(comma + 1)), refinement_rounds};
}

std::vector<Complex> polar_grid(double radius, int n_r, int n_theta) {
  std::vector<Complex> pts;
  pts.reserve(1 + static_cast<std::size_t>(n_r) * static_cast<std::size_t>(n_theta));
  pts.emplace_back(0.0, 0.0);
  for (int i = 0; i < n_r; ++i) {
    const double r = radius * (i + 1) / n_r;
    for (int j = 0; j < n_theta; ++j) {
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / n_theta));
    }
  }
  return pts;
}

double halton(std::size_t index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

}  // namespace elliptica
