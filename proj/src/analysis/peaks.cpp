#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "zetaspec/analysis.hpp"
#include "zetaspec/error.hpp"

namespace zetaspec {

namespace {

// Amplitudes closer than this fraction of the largest are treated as equal, so
// rounding noise never decides an ordering or creates a spurious maximum.
constexpr double kTieFraction = 1e-9;

std::vector<double> amplitudes(const Spectrum& spectrum) {
  std::vector<double> a(spectrum.size());
  for (std::size_t l = 0; l < a.size(); ++l) a[l] = std::abs(spectrum.bins[l]);
  return a;
}

// Quantized amplitude; equal keys are ties.
std::vector<std::int64_t> rank_keys(const std::vector<double>& amplitude, double scale) {
  std::vector<std::int64_t> keys(amplitude.size(), 0);
  if (scale <= 0.0) return keys;
  for (std::size_t l = 0; l < keys.size(); ++l) keys[l] = std::llround(amplitude[l] / (scale * kTieFraction));
  return keys;
}

std::vector<std::size_t> order_by_key(std::vector<std::size_t> bins, const std::vector<std::int64_t>& keys) {
  std::stable_sort(bins.begin(), bins.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] != keys[b] ? keys[a] > keys[b] : a < b;
  });
  return bins;
}

}  // namespace

std::vector<std::size_t> amplitude_order(const Spectrum& spectrum) {
  const auto amplitude = amplitudes(spectrum);
  const double top = amplitude.empty() ? 0.0 : *std::max_element(amplitude.begin(), amplitude.end());
  std::vector<std::size_t> bins(spectrum.size());
  std::iota(bins.begin(), bins.end(), std::size_t{0});
  return order_by_key(std::move(bins), rank_keys(amplitude, top));
}

std::vector<PeakReport> detect_peaks(const Spectrum& spectrum, double threshold_fraction) {
  if (!(threshold_fraction > 0.0 && threshold_fraction <= 1.0)) {
    throw DomainError("detect_peaks: threshold fraction must be in (0, 1]");
  }
  const std::size_t n = spectrum.size();
  if (n < 2) return {};
  const auto amplitude = amplitudes(spectrum);
  const std::size_t half = n / 2;

  double top = 0.0;
  for (std::size_t l = 1; l <= half; ++l) top = std::max(top, amplitude[l]);
  if (top == 0.0) return {};
  const double eps = top * kTieFraction;
  const double floor = threshold_fraction * top - eps;

  std::vector<std::size_t> found;
  for (std::size_t l = 1; l <= half; ++l) {
    const double here = amplitude[l];
    const double left = amplitude[l - 1];
    const double right = amplitude[(l + 1) % n];
    // Rising strictly on the left, not falling short on the right: plateaus report their first bin.
    if (here >= floor && here - left > eps && right - here <= eps) found.push_back(l);
  }

  std::vector<PeakReport> peaks;
  for (std::size_t l : order_by_key(std::move(found), rank_keys(amplitude, top))) {
    const double f = spectrum.frequency(l);
    peaks.push_back({l, f, amplitude[l], 1.0 / f});
  }
  return peaks;
}

}  // namespace zetaspec
