#include "kernels/detail.hpp"
#include "zetaspec/kernels.hpp"
#include "zetaspec/numtheory.hpp"

namespace zetaspec::kernels::serial {

void direct_dft(std::span<const double> values, std::span<std::complex<double>> out) {
  const auto w = detail::twiddles(values.size());
  for (std::size_t l = 0; l < values.size(); ++l) out[l] = detail::direct_bin(values, w, l);
}

void shifted_dft(std::span<const double> values, double delta, double shift, std::span<std::complex<double>> out) {
  for (std::size_t l = 0; l < values.size(); ++l) out[l] = detail::shifted_bin(values, delta, shift, l);
}

void partial_inverse(std::span<const std::complex<double>> spectrum, std::span<const std::size_t> bins,
                     std::span<double> out) {
  const auto w = detail::twiddles(spectrum.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::inverse_sample(spectrum, bins, w, i);
}

void sample_z(double t_min, double t_max, double step, double switch_point, std::span<double> out) {
  const ZOptions options{switch_point};
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = riemann_siegel_z(scan_point(t_min, t_max, step, i), options);
  }
}

}  // namespace zetaspec::kernels::serial
