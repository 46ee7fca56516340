#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bke/strength.hpp"

namespace bke::bench {

using ordered_json = nlohmann::ordered_json;

/// Four expansion experiments, timed per iteration with a monotonic
/// clock:
///   1  caterpillar -> cocoon, one key
///   2  cocoon -> butterfly, one key
///   3  caterpillar -> cocoon, batch of `batch` keys (per-key time)
///   4  cocoon -> butterfly, batch of `batch` keys (per-key time)
/// Key generation, prime search and expansion-value wrapping stay
/// outside every timed region.
struct Config {
  std::vector<int> experiments = {1, 2, 3, 4};
  std::vector<int> strengths = {80, 112, 128};
  unsigned iterations = 1000;
  unsigned batch = 20;
  unsigned warmup = 16;
  uint64_t seed = 1;
  /// Experiment 2 times C = cG plus the point addition; the ECIES wrap
  /// of c is excluded unless this flag is set.
  bool include_ecies_in_exp2 = false;
  /// Use the pre-generated caterpillars for the 7680/15360-bit sizes.
  bool use_cached_keys = true;
  unsigned expansion_prime_bits = 256;

  static Config from_json(const ordered_json& j);
  ordered_json to_json() const;
};

struct CellStats {
  double mean_us = 0.0;
  double stddev_us = 0.0;  // sample standard deviation
  size_t n = 0;
  bool present = false;
};

struct CellKey {
  int experiment;
  int strength;
  Scheme scheme;
  auto operator<=>(const CellKey&) const = default;
};

using SampleSet = std::map<CellKey, std::vector<double>>;

struct Report {
  std::map<int, std::map<int, std::map<Scheme, CellStats>>> cells;
  std::vector<std::string> warnings;
  Config config;

  const CellStats* cell(int experiment, int strength, Scheme scheme) const;
  /// ECC mean / RSA mean from this run's own samples; NaN when either
  /// side is missing.
  double ratio(int experiment, int strength) const;

  std::string to_csv() const;
  std::string to_json_text() const;
  /// Per-experiment mean(stddev) tables plus the ratio table; the grid
  /// shape is fixed (all five strengths, all four experiments) with
  /// explicit gap markers for unmeasured cells.
  std::string to_markdown() const;
  /// Plain-text ratio table for the console.
  std::string ratio_summary() const;
};

/// Returns exactly `config.iterations` wall-clock samples in
/// microseconds for one (experiment, strength, scheme) cell.
std::vector<double> run_experiment(int experiment, int strength,
                                   Scheme scheme, const Config& config);

/// Mean / sample stddev / count per cell.
Report summarize(const SampleSet& samples, const Config& config);

/// Runs every requested cell and summarizes.
Report run(const Config& config);

/// Smallest observable tick of the timing clock, in microseconds.
double clock_resolution_us();

}  // namespace bke::bench
