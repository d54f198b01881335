#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rankcentrality/comparison_graph.hpp"

namespace rankcentrality {

enum class Algorithm { rc, rc_reg, mle, mle_reg, borda, ratio, mc1, mc2, mc3, mc4 };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);
const std::vector<Algorithm>& all_algorithms();

struct EstimatorParams {
  /// Pseudo-count for rc_reg.
  double epsilon = 1.0;
  /// Ridge weight for mle_reg.
  double lambda = 1.0;
  /// Uniform-jump weight for mc1..mc4.
  double ergodic_alpha = 0.05;
  /// Smoothing for ratio; 0 keeps zero-denominator failures visible.
  double ratio_smoothing = 0.0;
};

struct Estimate {
  /// Non-negative, summing to one.
  Eigen::VectorXd scores;
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
  std::vector<std::string> warnings;
};

/// Runs one algorithm. Computation failures propagate as ComputationError.
Estimate estimate(Algorithm algorithm, const ComparisonGraph& graph,
                  const EstimatorParams& params = {});

}  // namespace rankcentrality
