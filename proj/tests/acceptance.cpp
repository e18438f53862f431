// Acceptance suite: one line per criterion, non-zero exit if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle/oracle.hpp"
#include "zetaspec/analysis.hpp"
#include "zetaspec/kernels.hpp"
#include "zetaspec/numtheory.hpp"
#include "zetaspec/pipeline.hpp"
#include "zetaspec/spectral.hpp"

using namespace zetaspec;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// Zeros to 100, delta 1, L 100.
struct Scenario {
  EventSequence zeros;
  MangoldtSeries series;
  Spectrum spectrum;
};

const Scenario& fig2() {
  static const Scenario scenario = [] {
    auto zeros = find_zeros(0.0, 100.0);
    auto series = build_series(zeros, GridSpec{1.0, 100, 0.0});
    auto spectrum = dft(series);
    return Scenario{std::move(zeros), std::move(series), std::move(spectrum)};
  }();
  return scenario;
}

Outcome zero_finder() {
  const auto start = std::chrono::steady_clock::now();
  const auto zeros = locate_zeros(0.0, 100.0);
  std::vector<long> counts;
  for (double t : {30.0, 100.0, 500.0}) counts.push_back(static_cast<long>(find_zeros(0.0, t).size()));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool pass = zeros.size() == 29 && seconds < 10.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min<std::size_t>(zeros.size(), 29); ++i) {
    const double approx = fixtures::kZerosBelow100[i];
    const double refined = oracle::refine_zero(approx - 0.01, approx + 0.01);
    worst = std::max(worst, std::abs(zeros[i].ordinate - refined));
  }
  pass = pass && worst < 1e-6;
  const long expected[] = {zero_count(30.0), zero_count(100.0), zero_count(500.0)};
  for (std::size_t i = 0; i < 3; ++i) pass = pass && counts[i] == expected[i];
  return {pass, fmt("29 zeros max|err|=%.2e vs oracle-refined; counts %ld/%ld/%ld vs N(T) %ld/%ld/%ld; %.2fs", worst,
                    counts[0], counts[1], counts[2], expected[0], expected[1], expected[2], seconds)};
}

Outcome transform_fidelity() {
  std::mt19937_64 rng(2);
  double worst = 0.0;
  for (std::size_t n : {4u, 16u, 128u, 1000u}) {
    const auto v = fixtures::random_indicator(n, rng);
    const GridSpec grid{1.0, n, 0.0};
    const auto fast = dft(v, grid, DftMethod::fast);
    std::vector<cplx> literal(n);
    kernels::serial::shifted_dft(v, grid.delta, 0.0, literal);
    for (std::size_t l = 0; l < n; ++l) worst = std::max(worst, std::abs(fast.bins[l] - literal[l]));
  }
  return {worst < 1e-9, fmt("max per-bin |fast - direct| = %.2e over N in {4,16,128,1000}", worst)};
}

Outcome periodicity() {
  std::mt19937_64 rng(3);
  const std::vector<std::uint64_t> zs{1, 2, 3};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 255;
    const auto v = fixtures::random_indicator(n, rng);
    const MangoldtSeries series(GridSpec{1.0, n, 0.0}, fixtures::marks_of(v));
    for (const auto& r : periodicity_check(series, zs, 1e-9)) worst = std::max(worst, r.max_diff);
  }
  return {worst < 1e-9, fmt("max |X(nu+zN) - X(nu)| = %.2e over 20 random series, z in {1,2,3}", worst)};
}

Outcome symmetry() {
  const auto r = conjugate_symmetry_check(fig2().spectrum, 1e-9);
  return {r.pass, fmt("max ||X(l)| - |X(N-l)|| = %.2e", r.max_asymmetry)};
}

Outcome reconstruction() {
  const auto& s = fig2();
  const auto full = reconstruct(s.spectrum, s.series.values());
  bool monotone = true;
  double previous = std::numeric_limits<double>::infinity();
  std::string energies;
  for (std::size_t k : {1u, 5u, 10u, 25u, 50u, 100u}) {
    const auto r = reconstruct(s.spectrum, s.series.values(), k);
    const double energy = r.rms_error * r.rms_error * 100.0;
    monotone = monotone && energy <= previous;
    previous = energy;
    energies += fmt(" %.3g", energy);
  }
  return {full.max_abs_error < 1e-9 && monotone,
          fmt("full max residual %.2e; residual energy k=1,5,10,25,50,100:", full.max_abs_error) + energies};
}

Outcome peak_gap() {
  std::vector<double> events;
  for (int k = 1; k * 10 < 100; ++k) events.push_back(10.0 * k);
  const auto series = build_series(events, GridSpec{1.0, 100, 0.0});
  const auto peaks = detect_peaks(dft(series));
  if (peaks.empty()) return {false, "no peaks"};
  const double df = 0.01;
  const bool pass = std::abs(peaks[0].frequency - 0.1) <= df;
  return {pass, fmt("top peak f=%.4f implied_gap=%.4f (bin width %.2f)", peaks[0].frequency, peaks[0].implied_gap, df)};
}

Outcome ratios_and_pnt() {
  double worst = 0.0;
  for (std::size_t n : {100u, 1000u}) {
    const auto ratios = frequency_ratio_series(dft(std::vector<double>(n, 0.0), GridSpec{1.0, n, 0.0}));
    for (std::size_t t = 1; t + 1 < n; ++t) {
      worst = std::max(worst, std::abs(ratios.ratios[t - 1] - static_cast<double>(t + 1) / static_cast<double>(t)));
    }
  }
  const auto fig2_ratios = frequency_ratio_series(fig2().spectrum);
  for (std::size_t t = 1; t + 1 < 100; ++t) {
    worst = std::max(worst, std::abs(fig2_ratios.ratios[t - 1] - static_cast<double>(t + 1) / static_cast<double>(t)));
  }
  bool pass = worst < 1e-12;

  // Oracle: trial-division pi(x), independent of the sieve.
  const auto primes = oracle::trial_division_primes(1000000);
  double previous = 2.0;
  double pnt_err = 0.0;
  std::string values;
  for (std::uint64_t x : {1000u, 10000u, 100000u, 1000000u}) {
    const auto pi_x = static_cast<double>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
    const double expected = pi_x * std::log(static_cast<double>(x)) / static_cast<double>(x);
    const double got = pnt_ratio(x);
    pnt_err = std::max(pnt_err, std::abs(got - expected));
    pass = pass && got < previous;
    previous = got;
    values += fmt(" %.6f", got);
  }
  pass = pass && pnt_err < 1e-6;
  return {pass, fmt("ratio max|err| %.1e; pnt_ratio(1e3..1e6):", worst) + values +
                    fmt(" (max|err| vs oracle %.1e, strictly decreasing)", pnt_err)};
}

Outcome spiral() {
  const auto points = fermat_spiral(fig2().spectrum);
  double worst = 0.0;
  bool increasing = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    worst = std::max(worst, std::abs(points[i].x * points[i].x + points[i].y * points[i].y - points[i].f * points[i].f));
    if (i > 0 && !(points[i].r > points[i - 1].r)) increasing = false;
  }
  return {worst < 1e-12 && increasing, fmt("max |x^2+y^2-f^2| = %.2e; moduli strictly increasing: %s", worst,
                                           increasing ? "yes" : "no")};
}

Outcome parseval_dc() {
  const auto& s = fig2();
  const double marks = static_cast<double>(s.series.marked_indices().size());
  const bool dc_exact = s.spectrum.bins[0] == cplx(marks, 0.0);
  const auto p = parseval_check(s.series.values(), s.spectrum, 1e-9);
  return {dc_exact && p.pass, fmt("X(0) = %.17g (marks %.0f); Parseval relative error %.2e", s.spectrum.bins[0].real(),
                                  marks, p.relative_error)};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const auto base = fs::temp_directory_path() / "zetaspec_acceptance";
  fs::remove_all(base);
  for (const char* run_name : {"a", "b"}) {
    const std::string command =
        std::string(ZETASPEC_CLI_PATH) + " run --out " + (base / run_name).string() + " 2> /dev/null";
    const int raw = std::system(command.c_str());
    if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) return {false, std::string("CLI run failed: ") + command};
  }
  std::size_t compared = 0;
  for (Artifact artifact : kAllArtifacts) {
    const auto name = artifact_file(artifact);
    const auto a = slurp(base / "a" / name);
    if (a.empty() || a != slurp(base / "b" / name)) return {false, name + " differs between runs"};
    ++compared;
  }
  fs::remove_all(base);
  return {true, fmt("%zu CSV files byte-identical across two CLI runs", compared)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1  zero finder", zero_finder},
      {"AC2  transform fidelity", transform_fidelity},
      {"AC3  periodicity", periodicity},
      {"AC4  conjugate symmetry", symmetry},
      {"AC5  reconstruction", reconstruction},
      {"AC6  peak/gap", peak_gap},
      {"AC7  ratios + PNT", ratios_and_pnt},
      {"AC8  spiral", spiral},
      {"AC9  Parseval + DC", parseval_dc},
      {"AC10 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": " << outcome.detail << '\n';
    failures += outcome.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
