#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zetaspec {

enum class Source { zeros_computed, zeros_file, primes, synthetic };
enum class Artifact { series, spectrum, spiral, peaks, recon, ratios, pnt };

std::string_view to_string(Source source);
std::string_view to_string(Artifact artifact);
std::optional<Source> parse_source(std::string_view text);
std::optional<Artifact> parse_artifact(std::string_view text);

/// File name written for an artifact, e.g. "spectrum.csv".
std::string artifact_file(Artifact artifact);

inline const std::set<Artifact> kAllArtifacts{Artifact::series, Artifact::spectrum, Artifact::spiral, Artifact::peaks,
                                              Artifact::recon,  Artifact::ratios,   Artifact::pnt};

struct RunConfig {
  Source source = Source::zeros_computed;
  double t_max = 100.0;           // zeros-computed; synthetic extent when length is unset
  std::uint64_t limit = 100;      // primes
  double delta = 1.0;
  std::optional<std::size_t> length;
  std::optional<std::filesystem::path> zero_file;
  std::filesystem::path out_dir = "zetaspec-out";
  std::set<Artifact> emit = kAllArtifacts;
  std::optional<std::size_t> k_terms;
  double threshold = 0.5;
  std::vector<std::uint64_t> z_values{1, 2, 3};
  double tol = 1e-9;
  double gap = 10.0;              // synthetic impulse-train spacing
  double switch_point = 250.0;

  /// Throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
};

struct RunOutcome {
  int status = 0;  // 0 ok, 1 failed check
  nlohmann::json manifest;
};

/// Builds the series, transforms it, runs the checks and writes every requested CSV plus
/// manifest.json into out_dir. Progress goes to `log`.
RunOutcome run(const RunConfig& config, std::ostream& log);

enum class SelftestFault { none, spectrum, spiral };

/// Built-in invariant suites; one verdict line per suite on `out`. Returns 0 iff all pass.
int selftest(std::ostream& out, SelftestFault fault = SelftestFault::none);

}  // namespace zetaspec
