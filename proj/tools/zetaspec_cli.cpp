// zetaspec: indicator series over zeta zeros or primes, its DFT, property checks and
// CSV/JSON emission for plotting.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetaspec/error.hpp"
#include "zetaspec/pipeline.hpp"

namespace {

constexpr int kUsageError = 2;

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

zetaspec::RunConfig to_config(const std::string& source, const std::string& emit, const std::string& k_terms,
                              const std::string& z_list, zetaspec::RunConfig config) {
  using zetaspec::ConfigError;
  const auto parsed_source = zetaspec::parse_source(source);
  if (!parsed_source) throw ConfigError("unknown --source '" + source + "'");
  config.source = *parsed_source;

  config.emit.clear();
  if (emit != "none") {
    for (const auto& name : split(emit)) {
      if (name == "all") {
        config.emit = zetaspec::kAllArtifacts;
        continue;
      }
      const auto artifact = zetaspec::parse_artifact(name);
      if (!artifact) throw ConfigError("unknown --emit entry '" + name + "'");
      config.emit.insert(*artifact);
    }
  }

  if (k_terms != "all") {
    try {
      std::size_t used = 0;
      const long long k = std::stoll(k_terms, &used);
      if (used != k_terms.size() || k < 1) throw ConfigError("");
      config.k_terms = static_cast<std::size_t>(k);
    } catch (const std::exception&) {
      throw ConfigError("--k-terms must be a positive integer or 'all'");
    }
  }

  config.z_values.clear();
  for (const auto& item : split(z_list)) {
    try {
      std::size_t used = 0;
      const long long z = std::stoll(item, &used);
      if (used != item.size() || z < 1) throw ConfigError("");
      config.z_values.push_back(static_cast<std::uint64_t>(z));
    } catch (const std::exception&) {
      throw ConfigError("--z entries must be positive integers");
    }
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetaspec: spectra of zeta-zero and prime indicator series"};
  app.require_subcommand(1);

  zetaspec::RunConfig config;
  std::string source = "zeros-computed";
  std::string emit = "all";
  std::string k_terms = "all";
  std::string z_list = "1,2,3";
  std::string zero_file;
  std::size_t length = 0;
  std::string out_dir = config.out_dir.string();

  auto* run = app.add_subcommand("run", "build the series, transform it and emit CSV + manifest.json");
  run->add_option("--source", source, "zeros-computed | zeros-file | primes | synthetic")->capture_default_str();
  run->add_option("--t-max", config.t_max, "upper ordinate for computed zeros (synthetic extent)")
      ->capture_default_str();
  run->add_option("--limit", config.limit, "prime sieve limit")->capture_default_str();
  run->add_option("--delta", config.delta, "sampling period")->capture_default_str();
  run->add_option("--length", length, "number of samples (default: cover the last event)");
  run->add_option("--zero-file", zero_file, "zero table, one ordinate per line");
  run->add_option("--out", out_dir, "output directory")->capture_default_str();
  run->add_option("--emit", emit, "comma list of series,spectrum,spiral,peaks,recon,ratios,pnt | all | none")
      ->capture_default_str();
  run->add_option("--k-terms", k_terms, "reconstruction terms, integer or 'all'")->capture_default_str();
  run->add_option("--threshold", config.threshold, "peak threshold as a fraction of the largest non-DC amplitude")
      ->capture_default_str();
  run->add_option("--z", z_list, "comma list of periodicity shifts")->capture_default_str();
  run->add_option("--tol", config.tol, "tolerance for the property checks")->capture_default_str();
  run->add_option("--gap", config.gap, "synthetic impulse-train spacing")->capture_default_str();
  run->add_option("--switch-point", config.switch_point, "ordinate where Z switches to Riemann-Siegel")
      ->capture_default_str();

  std::string fault = "none";
  auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suites");
  selftest->add_option("--inject-fault", fault, "corrupt a fixture: spectrum | spiral")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (*selftest) {
    zetaspec::SelftestFault injected = zetaspec::SelftestFault::none;
    if (fault == "spectrum") {
      injected = zetaspec::SelftestFault::spectrum;
    } else if (fault == "spiral") {
      injected = zetaspec::SelftestFault::spiral;
    } else if (fault != "none") {
      std::cerr << "zetaspec: unknown fault '" << fault << "'\n";
      return kUsageError;
    }
    return zetaspec::selftest(std::cout, injected);
  }

  try {
    if (run->count("--length") > 0) config.length = length;
    if (!zero_file.empty()) config.zero_file = zero_file;
    config.out_dir = out_dir;
    config = to_config(source, emit, k_terms, z_list, config);
    const auto outcome = zetaspec::run(config, std::cerr);
    return outcome.status;
  } catch (const zetaspec::ConfigError& e) {
    std::cerr << "zetaspec: " << e.what() << "\nRun with --help for usage.\n";
    return kUsageError;
  } catch (const zetaspec::ParseError& e) {
    std::cerr << "zetaspec: " << e.what() << '\n';
    return kUsageError;
  } catch (const zetaspec::OrderingError& e) {
    std::cerr << "zetaspec: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "zetaspec: " << e.what() << '\n';
    return 1;
  }
}
