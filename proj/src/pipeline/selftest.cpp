#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>

#include "zetaspec/analysis.hpp"
#include "zetaspec/grid.hpp"
#include "zetaspec/numtheory.hpp"
#include "zetaspec/pipeline.hpp"
#include "zetaspec/spectral.hpp"

namespace zetaspec {

namespace {

// Zero ordinates below 100, 10 decimals.
constexpr std::array<double, 29> kZerosBelow100{
    14.1347251417, 21.0220396388, 25.0108575801, 30.4248761259, 32.9350615877, 37.5861781588,
    40.9187190121, 43.3270732809, 48.0051508812, 49.7738324777, 52.9703214777, 56.4462476971,
    59.3470440026, 60.8317785246, 65.1125440481, 67.0798105295, 69.5464017112, 72.0671576745,
    75.7046906991, 77.1448400689, 79.3373750202, 82.9103808541, 84.7354929805, 87.4252746131,
    88.8091112076, 92.4918992706, 94.6513440405, 95.8706342282, 98.8311942182};

constexpr double kTol = 1e-9;

struct Fixture {
  MangoldtSeries series;
  Spectrum spectrum;
  std::vector<SpiralPoint> spiral;
};

Fixture make_fixture(SelftestFault fault) {
  const EventSequence zeros(std::vector<double>(kZerosBelow100.begin(), kZerosBelow100.end()), EventKind::zeta_zeros,
                            EventSource::synthetic);
  auto series = build_series(zeros, GridSpec{1.0, 100, 0.0});
  auto spectrum = dft(series);
  if (fault == SelftestFault::spectrum) spectrum.bins[3] += cplx(1e-3, 0.0);
  auto spiral = fermat_spiral(spectrum);
  if (fault == SelftestFault::spiral) spiral[5].x += 1e-3;
  return {std::move(series), std::move(spectrum), std::move(spiral)};
}

struct Verdict {
  bool pass;
  double max_error;
};

Verdict round_trip(const Fixture& fx) {
  const auto back = idft(fx.spectrum);
  double worst = 0.0;
  for (std::size_t i = 0; i < back.size(); ++i) worst = std::max(worst, std::abs(back[i] - fx.series[i]));
  return {worst < kTol, worst};
}

Verdict periodicity(const Fixture& fx) {
  const double n = static_cast<double>(fx.series.size());
  double worst = 0.0;
  for (int z = 1; z <= 3; ++z) {
    for (std::size_t l = 0; l < fx.spectrum.size(); ++l) {
      const double nu = (static_cast<double>(l) + z * n) * fx.spectrum.freq_step();
      worst = std::max(worst, std::abs(evaluate_at(fx.series.values(), fx.series.grid(), nu) - fx.spectrum.bins[l]));
    }
  }
  return {worst < kTol, worst};
}

Verdict symmetry(const Fixture& fx) {
  const auto report = conjugate_symmetry_check(fx.spectrum, kTol);
  return {report.pass, report.max_asymmetry};
}

Verdict parseval(const Fixture& fx) {
  const auto report = parseval_check(fx.series.values(), fx.spectrum, kTol);
  return {report.pass, report.relative_error};
}

Verdict spiral(const Fixture& fx) {
  double worst = 0.0;
  bool increasing = true;
  for (std::size_t i = 0; i < fx.spiral.size(); ++i) {
    const auto& p = fx.spiral[i];
    worst = std::max(worst, std::abs(p.x * p.x + p.y * p.y - p.r * p.r));
    if (i > 0 && !(p.r > fx.spiral[i - 1].r)) increasing = false;
  }
  return {increasing && worst < 1e-12, worst};
}

}  // namespace

int selftest(std::ostream& out, SelftestFault fault) {
  const Fixture fx = make_fixture(fault);
  const std::array<std::pair<const char*, std::function<Verdict(const Fixture&)>>, 5> suites{{
      {"round_trip", round_trip},
      {"periodicity", periodicity},
      {"symmetry", symmetry},
      {"parseval", parseval},
      {"spiral", spiral},
  }};
  int failures = 0;
  for (const auto& [name, suite] : suites) {
    const Verdict v = suite(fx);
    char err[32];
    std::snprintf(err, sizeof err, "%.3e", v.max_error);
    out << "selftest " << name << ": " << (v.pass ? "PASS" : "FAIL") << " (max_error " << err << ")\n";
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace zetaspec
