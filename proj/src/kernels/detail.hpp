#pragma once

// Per-item bodies shared by the parallel and serial kernels. Keeping one definition
// guarantees both variants perform the same floating-point operations in the same order.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace zetaspec::kernels::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// twiddle[m] = e^{-i 2 pi m / n}
inline std::vector<std::complex<double>> twiddles(std::size_t n) {
  std::vector<std::complex<double>> w(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double angle = kTwoPi * static_cast<double>(m) / static_cast<double>(n);
    w[m] = {std::cos(angle), -std::sin(angle)};
  }
  return w;
}

inline std::complex<double> direct_bin(std::span<const double> values, std::span<const std::complex<double>> w,
                                       std::size_t l) {
  const std::size_t n = values.size();
  std::complex<double> acc = 0.0;
  std::size_t m = 0;  // (l * k) mod n
  for (std::size_t k = 0; k < n; ++k) {
    acc += values[k] * w[m];
    m += l;
    if (m >= n) m %= n;
  }
  return acc;
}

inline std::complex<double> shifted_bin(std::span<const double> values, double delta, double shift, std::size_t l) {
  const double extent = static_cast<double>(values.size()) * delta;
  const double nu = (static_cast<double>(l) + shift) / extent;
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double phase = kTwoPi * nu * (static_cast<double>(k) * delta);
    acc += values[k] * std::complex<double>(std::cos(phase), -std::sin(phase));
  }
  return acc;
}

inline double inverse_sample(std::span<const std::complex<double>> spectrum, std::span<const std::size_t> bins,
                             std::span<const std::complex<double>> w, std::size_t n) {
  const std::size_t size = spectrum.size();
  double acc = 0.0;
  for (std::size_t l : bins) {
    const std::complex<double> rot = std::conj(w[(l * n) % size]);  // e^{+i 2 pi l n / N}
    acc += spectrum[l].real() * rot.real() - spectrum[l].imag() * rot.imag();
  }
  return acc / static_cast<double>(size);
}

}  // namespace zetaspec::kernels::detail
