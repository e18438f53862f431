#include <cmath>
#include <numbers>
#include <vector>

#include "zetaspec/error.hpp"
#include "zetaspec/kernels.hpp"
#include "zetaspec/spectral.hpp"

namespace zetaspec {

Spectrum dft(std::span<const double> values, const GridSpec& grid, DftMethod method) {
  grid.validate();
  if (values.size() != grid.length) throw DomainError("dft: series length does not match its grid");
  Spectrum spectrum{std::vector<cplx>(values.size()), grid};
  switch (method) {
    case DftMethod::fast:
      for (std::size_t k = 0; k < values.size(); ++k) spectrum.bins[k] = values[k];
      fft_inplace(spectrum.bins);
      {
        // DC has unit twiddles; take it from the plain sum so it equals the mark count exactly.
        double dc = 0.0;
        for (double v : values) dc += v;
        spectrum.bins[0] = dc;
      }
      break;
    case DftMethod::direct:
      kernels::direct_dft(values, spectrum.bins);
      break;
    case DftMethod::direct_serial:
      kernels::serial::direct_dft(values, spectrum.bins);
      break;
  }
  return spectrum;
}

Spectrum dft(const MangoldtSeries& series, DftMethod method) { return dft(series.values(), series.grid(), method); }

std::vector<cplx> idft_complex(const Spectrum& spectrum) {
  std::vector<cplx> out(spectrum.bins);
  if (!out.empty()) ifft_inplace(out);
  return out;
}

std::vector<double> idft(const Spectrum& spectrum) {
  const auto full = idft_complex(spectrum);
  std::vector<double> out(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) out[i] = full[i].real();
  return out;
}

std::vector<BinPolar> amplitude_phase(const Spectrum& spectrum) {
  std::vector<BinPolar> polar(spectrum.size());
  for (std::size_t l = 0; l < spectrum.size(); ++l) {
    const cplx bin = spectrum.bins[l];
    const double amplitude = std::abs(bin);
    double phase = amplitude == 0.0 ? 0.0 : std::arg(bin);
    if (phase == -std::numbers::pi) phase = std::numbers::pi;  // keep (-pi, pi]
    polar[l] = {amplitude, phase, spectrum.frequency(l)};
  }
  return polar;
}

cplx evaluate_at(std::span<const double> values, const GridSpec& grid, double nu) {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double phase = 2.0 * std::numbers::pi * nu * (static_cast<double>(k) * grid.delta);
    acc += values[k] * cplx(std::cos(phase), -std::sin(phase));
  }
  return acc;
}

}  // namespace zetaspec
