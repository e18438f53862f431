#include <algorithm>
#include <cmath>
#include <vector>

#include "zetaspec/error.hpp"
#include "zetaspec/kernels.hpp"
#include "zetaspec/spectral.hpp"

namespace zetaspec {

std::vector<PeriodicityReport> periodicity_check(const MangoldtSeries& series,
                                                 std::span<const std::uint64_t> z_values, double tol) {
  if (!(tol > 0.0)) throw DomainError("periodicity_check: tol must be positive");
  const auto values = series.values();
  const double delta = series.grid().delta;
  std::vector<cplx> base(values.size());
  std::vector<cplx> shifted(values.size());
  kernels::shifted_dft(values, delta, 0.0, base);

  std::vector<PeriodicityReport> reports;
  for (std::uint64_t z : z_values) {
    const double shift = static_cast<double>(z) * static_cast<double>(values.size());
    kernels::shifted_dft(values, delta, shift, shifted);
    double worst = 0.0;
    for (std::size_t l = 0; l < values.size(); ++l) worst = std::max(worst, std::abs(shifted[l] - base[l]));
    reports.push_back({z, worst, worst < tol});
  }
  return reports;
}

SymmetryReport conjugate_symmetry_check(const Spectrum& spectrum, double tol) {
  if (!(tol > 0.0)) throw DomainError("conjugate_symmetry_check: tol must be positive");
  SymmetryReport report;
  const std::size_t n = spectrum.size();
  for (std::size_t l = 1; l < n; ++l) {
    const double gap = std::abs(std::abs(spectrum.bins[l]) - std::abs(spectrum.bins[n - l]));
    if (gap > report.max_asymmetry) {
      report.max_asymmetry = gap;
      report.worst_bin = l;
    }
  }
  report.pass = report.max_asymmetry < tol;
  return report;
}

ParsevalReport parseval_check(std::span<const double> values, const Spectrum& spectrum, double tol) {
  if (!(tol > 0.0)) throw DomainError("parseval_check: tol must be positive");
  if (values.size() != spectrum.size()) throw DomainError("parseval_check: size mismatch");
  ParsevalReport report;
  for (double v : values) report.time_energy += v * v;
  for (const cplx& bin : spectrum.bins) report.spectral_energy += std::norm(bin);
  report.spectral_energy /= static_cast<double>(spectrum.size());
  const double diff = std::abs(report.time_energy - report.spectral_energy);
  report.relative_error = report.time_energy > 0.0 ? diff / report.time_energy : diff;
  report.pass = report.relative_error < tol;
  return report;
}

}  // namespace zetaspec
