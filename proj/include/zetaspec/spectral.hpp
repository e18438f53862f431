#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zetaspec/grid.hpp"

namespace zetaspec {

using cplx = std::complex<double>;

/// DFT bins X(nu_l), nu_l = l * df with df = 1 / (N * delta).
struct Spectrum {
  std::vector<cplx> bins;
  GridSpec grid;

  std::size_t size() const noexcept { return bins.size(); }
  double freq_step() const { return 1.0 / grid.extent(); }
  double frequency(std::size_t l) const { return static_cast<double>(l) / grid.extent(); }
};

struct BinPolar {
  double amplitude = 0.0;
  /// In (-pi, pi]; 0 for a zero-amplitude bin.
  double phase = 0.0;
  double frequency = 0.0;
};

enum class DftMethod {
  fast,           ///< mixed-radix Cooley-Tukey, any N
  direct,         ///< O(N^2) sum, OpenMP over bins
  direct_serial,  ///< O(N^2) sum, single thread (reference)
};

/// Forward transform with the e^{-i 2 pi nu x} sign, no windowing or padding.
Spectrum dft(const MangoldtSeries& series, DftMethod method = DftMethod::fast);
Spectrum dft(std::span<const double> values, const GridSpec& grid, DftMethod method = DftMethod::fast);

/// Complex inverse (1/N) sum X_l e^{+i 2 pi l k / N}.
std::vector<cplx> idft_complex(const Spectrum& spectrum);
/// Real part of idft_complex.
std::vector<double> idft(const Spectrum& spectrum);

std::vector<BinPolar> amplitude_phase(const Spectrum& spectrum);

/// The defining sum evaluated at an arbitrary frequency nu (location units^-1), phases 2 pi nu k delta.
cplx evaluate_at(std::span<const double> values, const GridSpec& grid, double nu);

// In-place transforms on complex data of any length. Exposed for the fast-path tests.
void fft_inplace(std::span<cplx> data);
void ifft_inplace(std::span<cplx> data);

// ---------------------------------------------------------------------------
// transform-level checks

struct PeriodicityReport {
  std::uint64_t z = 0;
  double max_diff = 0.0;
  bool pass = false;
};

/// max_l |X(nu_l + z N df) - X(nu_l)| for each z, both sides from the literal sum.
std::vector<PeriodicityReport> periodicity_check(const MangoldtSeries& series,
                                                 std::span<const std::uint64_t> z_values, double tol);

struct SymmetryReport {
  double max_asymmetry = 0.0;
  std::size_t worst_bin = 0;
  bool pass = false;
};

/// max over l in 1..N-1 of ||X(l)| - |X(N-l)||.
SymmetryReport conjugate_symmetry_check(const Spectrum& spectrum, double tol);

struct ParsevalReport {
  double time_energy = 0.0;
  double spectral_energy = 0.0;  // (1/N) sum |X_l|^2
  double relative_error = 0.0;
  bool pass = false;
};

ParsevalReport parseval_check(std::span<const double> values, const Spectrum& spectrum, double tol);

}  // namespace zetaspec
