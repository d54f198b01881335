#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rankcentrality/dataset.hpp"
#include "rankcentrality/estimators.hpp"
#include "rankcentrality/theory_checks.hpp"

namespace rankcentrality {

/// Synthetic BTL sweep over k (comparisons per pair, d fixed) or d (average
/// degree, k fixed).
struct ExperimentConfig {
  Index n = 400;
  double b = 10.0;
  ScalingParameter vary = ScalingParameter::k;
  std::vector<double> grid;
  /// d when varying k, k when varying d.
  double fixed = 60.0;
  int trials = 20;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algorithms{Algorithm::rc};
  EstimatorParams params;
};

/// Throws std::invalid_argument for an empty grid, trials < 1, d > n, a
/// non-positive grid value or an empty algorithm list.
void validate(const ExperimentConfig& config);

struct SweepRow {
  std::string algorithm;
  double parameter = 0.0;
  int trials = 0;
  /// Trials where the algorithm raised a computation error; excluded from
  /// the means.
  int failed = 0;
  int resampled = 0;
  double mean_dw = 0.0;
  double sd_dw = 0.0;
  double mean_error = 0.0;
  double sd_error = 0.0;
  /// Log-log slopes across the whole grid for this algorithm (repeated on
  /// every row of the algorithm).
  double slope_dw = 0.0;
  double slope_error = 0.0;
};

/// One row per (algorithm, grid point), algorithms in config order. Every
/// algorithm sees the same instances.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config);
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);

enum class CrbParameter { none, k, d, b };

struct CrbConfig {
  Index n = 100;
  double b = 10.0;
  double d = 60.0;
  std::int64_t k = 32;
  int trials = 20;
  std::uint64_t seed = 1;
  CrbParameter vary = CrbParameter::none;
  std::vector<double> grid;
};

struct CrbRow {
  std::string parameter_name;
  double parameter = 0.0;
  /// Mean normalized errors |pi - truth| / |truth|.
  double rc_error = 0.0;
  double mle_error = 0.0;
  /// Mean of sqrt(trace F^+) / |truth|.
  double crb = 0.0;
  int trials = 0;
  int failed = 0;
};

std::vector<CrbRow> run_crb_compare(const CrbConfig& config);
void write_crb_csv(std::ostream& os, std::span<const CrbRow> rows);

struct RobustnessConfig {
  std::vector<double> rates;
  int trials = 20;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algorithms{Algorithm::rc, Algorithm::borda};
  EstimatorParams params;
  int max_retries = 100;
};

struct RobustnessRow {
  std::string algorithm;
  double rate = 0.0;
  /// Mean D_L1 between the full-data and subsampled rankings.
  double mean_l1 = 0.0;
  int trials = 0;
  int failed = 0;
  int resampled = 0;
};

/// Keeps each compared pair with probability `rate`, ranks the subsample and
/// measures displacement against the full-data ranking of the same
/// algorithm. Disconnected subsamples are redrawn up to max_retries times.
std::vector<RobustnessRow> run_robustness(const Dataset& data,
                                          const RobustnessConfig& config);
void write_robustness_csv(std::ostream& os, std::span<const RobustnessRow> rows);

}  // namespace rankcentrality
