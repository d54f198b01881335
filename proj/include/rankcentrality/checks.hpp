#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankcentrality {

/// Outcome of a seeded Monte-Carlo property suite.
struct SuiteResult {
  std::string name;
  int instances = 0;
  int passed = 0;
  /// Draws discarded before counting (e.g. rho >= 1 for the trajectory suite).
  int skipped = 0;
  /// Suite-specific extreme value (largest residual, smallest slack, ...).
  double worst = 0.0;
  std::vector<std::string> notes;

  bool ok() const { return instances > 0 && passed == instances; }
};

/// Ideal chains on random graphs (n <= max_n, scores with b <= 10) satisfy
/// detailed balance to 1e-14. worst = largest residual.
SuiteResult balance_suite(std::uint64_t seed, int instances = 100, int max_n = 50);

/// Spectral-gap lower bound xi d_min / (b^2 d_max) on connected
/// Erdos-Renyi(n, d) graphs with b drawn uniformly from [1, b_max].
/// worst = smallest gap_lhs / gap_rhs.
SuiteResult gap_suite(std::uint64_t seed, int instances = 100, int n = 100,
                      double d = 20.0, double b_max = 10.0);

/// Dirichlet comparison between the ideal chain and the simple random walk on
/// the same instances as gap_suite. worst = smallest ratio / (alpha / beta).
SuiteResult dirichlet_suite(std::uint64_t seed, int instances = 100, int n = 100,
                            double d = 20.0, double b_max = 10.0);

/// Power-iteration error against the perturbation envelope on sampled data,
/// counting only draws with rho < 1 until `instances` of them are collected
/// (at most 10x draws). worst = smallest envelope - error gap.
SuiteResult perturbation_suite(std::uint64_t seed, int instances = 50, int n = 60,
                               double d = 40.0, double b = 3.0, std::int64_t k = 400,
                               int steps = 300);

}  // namespace rankcentrality
