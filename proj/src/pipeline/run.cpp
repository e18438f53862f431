#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "pipeline/csv.hpp"
#include "zetaspec/analysis.hpp"
#include "zetaspec/error.hpp"
#include "zetaspec/grid.hpp"
#include "zetaspec/numtheory.hpp"
#include "zetaspec/pipeline.hpp"
#include "zetaspec/spectral.hpp"

namespace zetaspec {

namespace {

constexpr std::uint64_t kPntDecades[] = {10, 100, 1000, 10000, 100000, 1000000};

EventSequence synthetic_train(const RunConfig& config) {
  const double extent = config.length ? static_cast<double>(*config.length - 1) * config.delta : config.t_max;
  std::vector<double> events;
  for (std::size_t k = 1;; ++k) {
    const double x = static_cast<double>(k) * config.gap;
    if (x > extent) break;
    events.push_back(x);
  }
  return EventSequence(std::move(events), EventKind::custom, EventSource::synthetic);
}

EventSequence load_events(const RunConfig& config, std::ostream& log) {
  switch (config.source) {
    case Source::zeros_computed: {
      ZeroScanOptions options;
      options.z.switch_point = config.switch_point;
      auto zeros = find_zeros(0.0, config.t_max, options);
      log << "zetaspec: " << zeros.size() << " zeros in (0, " << config.t_max << "]\n";
      return zeros;
    }
    case Source::zeros_file: {
      auto zeros = load_zeros(*config.zero_file);
      log << "zetaspec: " << zeros.size() << " zeros from " << config.zero_file->string() << '\n';
      return zeros;
    }
    case Source::primes: {
      auto primes = sieve_primes(config.limit);
      log << "zetaspec: " << primes.size() << " primes <= " << config.limit << '\n';
      return primes;
    }
    case Source::synthetic: {
      auto train = synthetic_train(config);
      log << "zetaspec: synthetic impulse train, " << train.size() << " marks, gap " << config.gap << '\n';
      return train;
    }
  }
  throw ConfigError("unknown source");
}

nlohmann::json check_entry(std::string name, bool pass, double max_error) {
  return {{"name", std::move(name)}, {"pass", pass}, {"max_error", max_error}};
}

std::size_t write_artifact(Artifact artifact, const std::filesystem::path& path, const RunConfig& config,
                           const MangoldtSeries& series, const Spectrum& spectrum) {
  switch (artifact) {
    case Artifact::series: {
      csv::Writer out(path, {"index", "location", "value"});
      for (std::size_t i = 0; i < series.size(); ++i) out.row(i, series.grid().location(i), series[i]);
      return out.rows();
    }
    case Artifact::spectrum: {
      csv::Writer out(path, {"l", "frequency", "re", "im", "amplitude", "phase"});
      const auto polar = amplitude_phase(spectrum);
      for (std::size_t l = 0; l < spectrum.size(); ++l) {
        out.row(l, polar[l].frequency, spectrum.bins[l].real(), spectrum.bins[l].imag(), polar[l].amplitude,
                polar[l].phase);
      }
      return out.rows();
    }
    case Artifact::spiral: {
      csv::Writer out(path, {"l", "f", "x", "y"});
      for (const auto& p : fermat_spiral(spectrum)) out.row(p.bin, p.f, p.x, p.y);
      return out.rows();
    }
    case Artifact::peaks: {
      csv::Writer out(path, {"l", "f", "amplitude", "implied_gap"});
      for (const auto& p : detect_peaks(spectrum, config.threshold)) {
        out.row(p.bin, p.frequency, p.amplitude, p.implied_gap);
      }
      return out.rows();
    }
    case Artifact::recon: {
      csv::Writer out(path, {"n", "original", "reconstructed", "abs_error"});
      const auto result = reconstruct(spectrum, series.values(), config.k_terms);
      for (std::size_t i = 0; i < series.size(); ++i) {
        out.row(i, series[i], result.values[i], std::abs(result.values[i] - series[i]));
      }
      return out.rows();
    }
    case Artifact::ratios: {
      csv::Writer out(path, {"t", "ratio", "reciprocal"});
      if (spectrum.size() < 3) return 0;
      const auto ratios = frequency_ratio_series(spectrum);
      const auto reciprocals = reciprocal_series(spectrum);
      for (std::size_t t = 1; t + 1 < spectrum.size(); ++t) {
        out.row(t, ratios.ratios[t - 1], reciprocals.reciprocals[t - 1]);
      }
      return out.rows();
    }
    case Artifact::pnt: {
      csv::Writer out(path, {"x", "pi_x", "ratio"});
      for (std::uint64_t x : kPntDecades) {
        out.row(static_cast<std::size_t>(x), static_cast<std::size_t>(prime_count(x)), pnt_ratio(x));
      }
      return out.rows();
    }
  }
  return 0;
}

}  // namespace

RunOutcome run(const RunConfig& config, std::ostream& log) {
  config.validate();

  const auto events = load_events(config, log);
  GridSpec grid = config.length ? GridSpec{config.delta, *config.length, 0.0} : GridSpec::covering(events, config.delta);
  grid.validate();
  if (config.k_terms && *config.k_terms > grid.length) {
    throw ConfigError("--k-terms exceeds the series length " + std::to_string(grid.length));
  }
  const auto series = build_series(events, grid);
  const auto spectrum = dft(series);
  log << "zetaspec: grid N=" << grid.length << " delta=" << grid.delta << ", " << series.marked_indices().size()
      << " marked samples\n";

  RunOutcome outcome;
  auto checks = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& report : periodicity_check(series, config.z_values, config.tol)) {
    checks.push_back(check_entry("periodicity_z" + std::to_string(report.z), report.pass, report.max_diff));
    all_pass = all_pass && report.pass;
  }
  const auto symmetry = conjugate_symmetry_check(spectrum, config.tol);
  checks.push_back(check_entry("conjugate_symmetry", symmetry.pass, symmetry.max_asymmetry));
  const auto parseval = parseval_check(series.values(), spectrum, config.tol);
  checks.push_back(check_entry("parseval", parseval.pass, parseval.relative_error));
  all_pass = all_pass && symmetry.pass && parseval.pass;

  std::filesystem::create_directories(config.out_dir);
  auto files = nlohmann::json::array();
  for (Artifact artifact : config.emit) {
    const auto name = artifact_file(artifact);
    const auto rows = write_artifact(artifact, config.out_dir / name, config, series, spectrum);
    files.push_back({{"name", name}, {"rows", rows}});
    log << "zetaspec: wrote " << name << " (" << rows << " rows)\n";
  }

  for (const auto& check : checks) {
    if (!check["pass"].get<bool>()) {
      log << "zetaspec: check " << check["name"].get<std::string>() << " FAILED, max error "
          << check["max_error"].get<double>() << '\n';
    }
  }

  outcome.status = all_pass ? 0 : 1;
  outcome.manifest = {{"config_echo", config.to_json()},
                      {"files", files},
                      {"checks", checks},
                      {"versions", {{"zetaspec", ZETASPEC_VERSION}, {"manifest_schema", 1}}}};
  std::ofstream manifest(config.out_dir / "manifest.json", std::ios::binary | std::ios::trunc);
  if (!manifest) throw Error("cannot write manifest in " + config.out_dir.string());
  manifest << outcome.manifest.dump(2) << '\n';
  return outcome;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Source source) {
  switch (source) {
    case Source::zeros_computed: return "zeros-computed";
    case Source::zeros_file: return "zeros-file";
    case Source::primes: return "primes";
    case Source::synthetic: return "synthetic";
  }
  return "";
}

std::string_view to_string(Artifact artifact) {
  switch (artifact) {
    case Artifact::series: return "series";
    case Artifact::spectrum: return "spectrum";
    case Artifact::spiral: return "spiral";
    case Artifact::peaks: return "peaks";
    case Artifact::recon: return "recon";
    case Artifact::ratios: return "ratios";
    case Artifact::pnt: return "pnt";
  }
  return "";
}

std::optional<Source> parse_source(std::string_view text) {
  for (Source s : {Source::zeros_computed, Source::zeros_file, Source::primes, Source::synthetic}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::optional<Artifact> parse_artifact(std::string_view text) {
  for (Artifact a : kAllArtifacts) {
    if (to_string(a) == text) return a;
  }
  return std::nullopt;
}

std::string artifact_file(Artifact artifact) { return std::string(to_string(artifact)) + ".csv"; }

void RunConfig::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("--delta must be positive");
  if (length && *length < 2) throw ConfigError("--length must be at least 2");
  if (!(tol > 0.0)) throw ConfigError("--tol must be positive");
  if (!(threshold > 0.0 && threshold <= 1.0)) throw ConfigError("--threshold must be in (0, 1]");
  if (k_terms && *k_terms < 1) throw ConfigError("--k-terms must be at least 1");
  if (!(switch_point >= 0.0)) throw ConfigError("switch point must be non-negative");
  for (auto z : z_values) {
    if (z == 0) throw ConfigError("--z values must be positive integers");
  }
  switch (source) {
    case Source::zeros_computed:
      if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ConfigError("--t-max must be positive");
      break;
    case Source::zeros_file:
      if (!zero_file) throw ConfigError("--source zeros-file needs --zero-file");
      break;
    case Source::primes:
      if (limit < 2) throw ConfigError("--limit must be at least 2");
      break;
    case Source::synthetic:
      if (!(gap > 0.0) || !std::isfinite(gap)) throw ConfigError("--gap must be positive");
      if (!length && !(t_max > 0.0)) throw ConfigError("synthetic source needs --length or --t-max");
      break;
  }
  if (zero_file && source != Source::zeros_file) throw ConfigError("--zero-file only applies to --source zeros-file");
}

nlohmann::json RunConfig::to_json() const {
  auto emitted = nlohmann::json::array();
  for (Artifact a : emit) emitted.push_back(std::string(to_string(a)));
  nlohmann::json j = {{"source", std::string(to_string(source))},
                      {"t_max", t_max},
                      {"limit", limit},
                      {"delta", delta},
                      {"length", nullptr},
                      {"zero_file", nullptr},
                      {"out_dir", out_dir.string()},
                      {"emit", emitted},
                      {"k_terms", nullptr},
                      {"threshold", threshold},
                      {"z", z_values},
                      {"tol", tol},
                      {"gap", gap},
                      {"switch_point", switch_point}};
  if (length) j["length"] = *length;
  if (zero_file) j["zero_file"] = zero_file->string();
  if (k_terms) j["k_terms"] = *k_terms;
  return j;
}

}  // namespace zetaspec
