#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zetaspec/grid.hpp"
#include "zetaspec/spectral.hpp"

namespace zetaspec {

struct FrequencyRatios {
  /// ratios[t-1] = f_{t+1} / f_t for t = 1..N-2.
  std::vector<double> ratios;
  /// t = floor(N/2) - 1, the last ratio inside the positive half-spectrum (f_{t+1} is Nyquist).
  std::size_t edge_t = 0;
  double edge_ratio = 0.0;
  /// f_{N-1} / f_{N-2}, reading f_max as the last bin.
  double last_bin_ratio = 0.0;
};

/// Requires N >= 3.
FrequencyRatios frequency_ratio_series(const Spectrum& spectrum);

struct ReciprocalFrequencies {
  /// reciprocals[t-1] = 1 / f_t for t = 1..N-1.
  std::vector<double> reciprocals;
  std::size_t edge_t = 0;  // floor(N/2)
  double edge_value = 0.0;
  double inverse_fs = 0.0;      // 1/f_s = delta
  double two_over_fs = 0.0;     // 2/f_s
};

ReciprocalFrequencies reciprocal_series(const Spectrum& spectrum);

struct SpiralPoint {
  std::size_t bin = 0;
  double f = 0.0;
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
};

/// r = a f with a = 1; (x, y) = (f cos f, f sin f).
SpiralPoint spiral_point(double f, std::size_t bin = 0);
std::vector<SpiralPoint> fermat_spiral(const Spectrum& spectrum);

struct PeakReport {
  std::size_t bin = 0;
  double frequency = 0.0;
  double amplitude = 0.0;
  double implied_gap = 0.0;  // 1 / frequency
};

inline constexpr double kDefaultPeakThreshold = 0.5;

/// Local amplitude maxima in bins 1..N/2 at or above threshold_fraction * (max non-DC amplitude),
/// strongest first, ties to the lower bin. Throws DomainError unless 0 < threshold_fraction <= 1.
std::vector<PeakReport> detect_peaks(const Spectrum& spectrum, double threshold_fraction = kDefaultPeakThreshold);

struct ReconstructionResult {
  /// Bins chosen, strongest first. Each bin brings its conjugate partner N-l into the sum.
  std::vector<std::size_t> terms;
  std::vector<double> values;
  double max_abs_error = 0.0;
  double rms_error = 0.0;
};

/// Bins ordered by descending amplitude, ties to the lower bin.
std::vector<std::size_t> amplitude_order(const Spectrum& spectrum);

/// Superposes (1/N) A_l cos(2 pi l n / N + phi_l) over the k strongest bins (all when k_terms is empty).
/// Throws DomainError for k_terms outside [1, N] or a size mismatch with `original`.
ReconstructionResult reconstruct(const Spectrum& spectrum, std::span<const double> original,
                                 std::optional<std::size_t> k_terms = std::nullopt);

/// pi(x) ln(x) / x. Throws DomainError for x < 2.
double pnt_ratio(std::uint64_t x);

}  // namespace zetaspec
