#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rankcentrality/dataset.hpp"
#include "rankcentrality/estimators.hpp"
#include "rankcentrality/metrics.hpp"

namespace rankcentrality {

struct RankRequest {
  Algorithm algorithm = Algorithm::rc;
  EstimatorParams params;
  std::uint64_t seed = 0;
};

struct RankingOutput {
  std::vector<std::string> items;
  Eigen::VectorXd scores;
  Ordering rank;
  std::string algorithm;
  EstimatorParams params;
  std::uint64_t seed = 0;
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
  std::size_t components = 1;
  std::vector<std::string> warnings;
};

/// Runs one algorithm on a dataset. Computation errors propagate; their
/// messages name the failing components or suggest a regularizer.
RankingOutput run_rank(const Dataset& data, const RankRequest& request);

/// {items, scores, rank, algorithm, params, diagnostics}
std::string to_json(const RankingOutput& out);
void write_csv(std::ostream& os, const RankingOutput& out);
/// Human-readable table, best item first.
void write_table(std::ostream& os, const RankingOutput& out);

}  // namespace rankcentrality
