#include <algorithm>
#include <cmath>

#include "zetaspec/analysis.hpp"
#include "zetaspec/error.hpp"

namespace zetaspec {

FrequencyRatios frequency_ratio_series(const Spectrum& spectrum) {
  const std::size_t n = spectrum.size();
  if (n < 3) throw DomainError("frequency_ratio_series: needs at least 3 bins");
  FrequencyRatios out;
  out.ratios.reserve(n - 2);
  for (std::size_t t = 1; t + 1 < n; ++t) out.ratios.push_back(spectrum.frequency(t + 1) / spectrum.frequency(t));
  out.edge_t = std::max<std::size_t>(1, n / 2 - 1);
  out.edge_ratio = out.ratios[out.edge_t - 1];
  out.last_bin_ratio = out.ratios.back();
  return out;
}

ReciprocalFrequencies reciprocal_series(const Spectrum& spectrum) {
  const std::size_t n = spectrum.size();
  if (n < 2) throw DomainError("reciprocal_series: needs at least 2 bins");
  ReciprocalFrequencies out;
  out.reciprocals.reserve(n - 1);
  for (std::size_t t = 1; t < n; ++t) out.reciprocals.push_back(1.0 / spectrum.frequency(t));
  out.edge_t = n / 2;
  out.edge_value = out.reciprocals[out.edge_t - 1];
  const double fs = 1.0 / spectrum.grid.delta;
  out.inverse_fs = 1.0 / fs;
  out.two_over_fs = 2.0 / fs;
  return out;
}

SpiralPoint spiral_point(double f, std::size_t bin) {
  return {bin, f, f * std::cos(f), f * std::sin(f), f};
}

std::vector<SpiralPoint> fermat_spiral(const Spectrum& spectrum) {
  std::vector<SpiralPoint> points;
  points.reserve(spectrum.size());
  for (std::size_t l = 0; l < spectrum.size(); ++l) points.push_back(spiral_point(spectrum.frequency(l), l));
  return points;
}

}  // namespace zetaspec
