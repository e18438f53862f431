#pragma once

// Data-parallel inner loops. Each kernel in `kernels` has a single-threaded twin in
// `kernels::serial` with the same summation order, so results are bitwise identical
// regardless of thread count.

#include <complex>
#include <cstddef>
#include <span>

namespace zetaspec::kernels {

/// out[l] = sum_k values[k] e^{-i 2 pi l k / N}, N = values.size().
void direct_dft(std::span<const double> values, std::span<std::complex<double>> out);

/// out[l] = sum_k values[k] e^{-i 2 pi nu_l x_k}, nu_l = (l + shift) / (N delta), x_k = k delta.
/// No index reduction: this is the literal defining sum at shifted frequencies.
void shifted_dft(std::span<const double> values, double delta, double shift,
                 std::span<std::complex<double>> out);

/// out[n] = (1/N) sum_{l in bins} Re(X_l e^{+i 2 pi l n / N}), bins visited in the given order.
void partial_inverse(std::span<const std::complex<double>> spectrum, std::span<const std::size_t> bins,
                     std::span<double> out);

/// out[i] = Z(t_min + i * step) (last point clamped to t_max).
void sample_z(double t_min, double t_max, double step, double switch_point, std::span<double> out);

namespace serial {

void direct_dft(std::span<const double> values, std::span<std::complex<double>> out);
void shifted_dft(std::span<const double> values, double delta, double shift,
                 std::span<std::complex<double>> out);
void partial_inverse(std::span<const std::complex<double>> spectrum, std::span<const std::size_t> bins,
                     std::span<double> out);
void sample_z(double t_min, double t_max, double step, double switch_point, std::span<double> out);

}  // namespace serial

/// Number of scan points for [t_min, t_max] at the given step (both ends included).
std::size_t scan_points(double t_min, double t_max, double step);

/// i-th scan abscissa.
double scan_point(double t_min, double t_max, double step, std::size_t i);

}  // namespace zetaspec::kernels
