#include <cmath>
#include <numbers>
#include <vector>

#include "zetaspec/spectral.hpp"

namespace zetaspec {

namespace {

// Prime factors above this go through Bluestein rather than an O(p^2) butterfly.
constexpr std::size_t kMaxDirectRadix = 64;

std::size_t smallest_factor(std::size_t n) {
  if (n % 2 == 0) return 2;
  for (std::size_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return f;
  }
  return n;
}

// Mixed-radix decimation in time. `w` holds e^{-i 2 pi j / N} for the top-level N and
// `w_stride` = N / n maps sub-problem twiddles onto it. Prime lengths fall back to an O(n^2) butterfly.
void transform(const cplx* in, std::size_t in_stride, cplx* out, std::size_t n, const std::vector<cplx>& w,
               std::size_t w_stride) {
  if (n == 1) {
    out[0] = in[0];
    return;
  }
  const std::size_t radix = smallest_factor(n);
  const std::size_t m = n / radix;
  for (std::size_t r = 0; r < radix; ++r) {
    transform(in + r * in_stride, in_stride * radix, out + r * m, m, w, w_stride * radix);
  }

  std::vector<cplx> column(radix);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = 0; r < radix; ++r) column[r] = out[r * m + k];
    for (std::size_t q = 0; q < radix; ++q) {
      const std::size_t bin = k + q * m;
      cplx acc = column[0];
      for (std::size_t r = 1; r < radix; ++r) {
        acc += column[r] * w[((r * bin) % n) * w_stride];
      }
      out[bin] = acc;
    }
  }
}

bool has_large_prime_factor(std::size_t n) {
  for (std::size_t f = 2; f * f <= n; ++f) {
    while (n % f == 0) n /= f;
  }
  return n > kMaxDirectRadix;
}

// Chirp-z: a length-n DFT as a circular convolution of power-of-two length.
void bluestein(std::span<cplx> data) {
  const std::size_t n = data.size();
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cplx> chirp(n);  // e^{-i pi k^2 / n}
  std::size_t k2 = 0;  // k^2 mod 2n
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = {std::cos(angle), -std::sin(angle)};
    k2 = (k2 + 2 * k + 1) % (2 * n);
  }
  std::vector<cplx> a(m, cplx{});
  std::vector<cplx> b(m, cplx{});
  for (std::size_t k = 0; k < n; ++k) a[k] = data[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);
  fft_inplace(a);
  fft_inplace(b);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  ifft_inplace(a);
  for (std::size_t k = 0; k < n; ++k) data[k] = a[k] * chirp[k];
}

}  // namespace

void fft_inplace(std::span<cplx> data) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  if (has_large_prime_factor(n)) {
    bluestein(data);
    return;
  }
  std::vector<cplx> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    w[j] = {std::cos(angle), -std::sin(angle)};
  }
  const std::vector<cplx> input(data.begin(), data.end());
  transform(input.data(), 1, data.data(), n, w, 1);
}

void ifft_inplace(std::span<cplx> data) {
  for (auto& v : data) v = std::conj(v);
  fft_inplace(data);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& v : data) v = std::conj(v) * scale;
}

}  // namespace zetaspec
