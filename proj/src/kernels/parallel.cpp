#include <algorithm>
#include <cmath>

#include "kernels/detail.hpp"
#include "zetaspec/kernels.hpp"
#include "zetaspec/numtheory.hpp"

namespace zetaspec::kernels {

std::size_t scan_points(double t_min, double t_max, double step) {
  const double spans = (t_max - t_min) / step;
  return static_cast<std::size_t>(std::ceil(spans - 1e-9)) + 1;
}

double scan_point(double t_min, double t_max, double step, std::size_t i) {
  return std::min(t_min + static_cast<double>(i) * step, t_max);
}

void direct_dft(std::span<const double> values, std::span<std::complex<double>> out) {
  const auto w = detail::twiddles(values.size());
  const auto n = static_cast<long>(values.size());
#pragma omp parallel for schedule(static)
  for (long l = 0; l < n; ++l) {
    out[static_cast<std::size_t>(l)] = detail::direct_bin(values, w, static_cast<std::size_t>(l));
  }
}

void shifted_dft(std::span<const double> values, double delta, double shift, std::span<std::complex<double>> out) {
  const auto n = static_cast<long>(values.size());
#pragma omp parallel for schedule(static)
  for (long l = 0; l < n; ++l) {
    out[static_cast<std::size_t>(l)] = detail::shifted_bin(values, delta, shift, static_cast<std::size_t>(l));
  }
}

void partial_inverse(std::span<const std::complex<double>> spectrum, std::span<const std::size_t> bins,
                     std::span<double> out) {
  const auto w = detail::twiddles(spectrum.size());
  const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = detail::inverse_sample(spectrum, bins, w, static_cast<std::size_t>(i));
  }
}

void sample_z(double t_min, double t_max, double step, double switch_point, std::span<double> out) {
  const ZOptions options{switch_point};
  const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        riemann_siegel_z(scan_point(t_min, t_max, step, static_cast<std::size_t>(i)), options);
  }
}

}  // namespace zetaspec::kernels
