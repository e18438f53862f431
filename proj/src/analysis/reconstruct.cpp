#include <algorithm>
#include <cmath>
#include <string>

#include "zetaspec/analysis.hpp"
#include "zetaspec/error.hpp"
#include "zetaspec/kernels.hpp"

namespace zetaspec {

namespace {

// Above this many bin-sample products the masked spectrum goes through the fast inverse instead.
constexpr double kDirectLimit = 1 << 24;

}  // namespace

ReconstructionResult reconstruct(const Spectrum& spectrum, std::span<const double> original,
                                 std::optional<std::size_t> k_terms) {
  const std::size_t n = spectrum.size();
  if (original.size() != n) throw DomainError("reconstruct: original series and spectrum differ in length");
  const std::size_t k = k_terms.value_or(n);
  if (k < 1 || k > n) {
    throw DomainError("reconstruct: k_terms must be in [1, " + std::to_string(n) + "], got " + std::to_string(k));
  }

  ReconstructionResult result;
  const auto order = amplitude_order(spectrum);
  result.terms.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));

  // Each chosen bin pairs with its conjugate so the superposition stays real.
  std::vector<bool> chosen(n, false);
  for (std::size_t l : result.terms) {
    chosen[l] = true;
    chosen[(n - l) % n] = true;
  }
  std::vector<std::size_t> bins;
  for (std::size_t l = 0; l < n; ++l) {
    if (chosen[l]) bins.push_back(l);
  }

  result.values.assign(n, 0.0);
  if (static_cast<double>(bins.size()) * static_cast<double>(n) <= kDirectLimit) {
    kernels::partial_inverse(spectrum.bins, bins, result.values);
  } else {
    Spectrum masked{std::vector<cplx>(n, cplx{}), spectrum.grid};
    for (std::size_t l : bins) masked.bins[l] = spectrum.bins[l];
    result.values = idft(masked);
  }

  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double err = std::abs(result.values[i] - original[i]);
    result.max_abs_error = std::max(result.max_abs_error, err);
    sum_sq += err * err;
  }
  result.rms_error = std::sqrt(sum_sq / static_cast<double>(n));
  return result;
}

}  // namespace zetaspec
