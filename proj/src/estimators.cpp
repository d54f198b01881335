#include "rankcentrality/estimators.hpp"

#include <array>
#include <stdexcept>

#include "rankcentrality/baselines.hpp"
#include "rankcentrality/rank_centrality.hpp"

namespace rankcentrality {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 10> kNames{{
    {Algorithm::rc, "rc"},
    {Algorithm::rc_reg, "rc_reg"},
    {Algorithm::mle, "mle"},
    {Algorithm::mle_reg, "mle_reg"},
    {Algorithm::borda, "borda"},
    {Algorithm::ratio, "ratio"},
    {Algorithm::mc1, "mc1"},
    {Algorithm::mc2, "mc2"},
    {Algorithm::mc3, "mc3"},
    {Algorithm::mc4, "mc4"},
}};

Estimate from_stationary(StationaryResult r) {
  Estimate e;
  e.scores = std::move(r.pi);
  e.iterations = r.iterations;
  e.residual = r.residual;
  e.converged = r.converged;
  e.warnings = std::move(r.warnings);
  return e;
}

Estimate from_mle(const MleResult& r) {
  Estimate e;
  e.scores = r.scores.values();
  e.iterations = r.iterations;
  e.residual = r.gradient_norm;
  e.converged = r.converged;
  return e;
}

Estimate from_scores(Eigen::VectorXd scores) {
  Estimate e;
  const double total = scores.sum();
  e.scores = total > 0.0 ? Eigen::VectorXd(scores / total) : scores;
  return e;
}

MarkovVariant variant_of(Algorithm a) {
  switch (a) {
    case Algorithm::mc1: return MarkovVariant::MC1;
    case Algorithm::mc2: return MarkovVariant::MC2;
    case Algorithm::mc3: return MarkovVariant::MC3;
    default: return MarkovVariant::MC4;
  }
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm algorithm) {
  for (const auto& [a, n] : kNames) {
    if (a == algorithm) return n;
  }
  return "?";
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all = [] {
    std::vector<Algorithm> v;
    for (const auto& [a, n] : kNames) v.push_back(a);
    return v;
  }();
  return all;
}

Estimate estimate(Algorithm algorithm, const ComparisonGraph& graph,
                  const EstimatorParams& params) {
  const Index n = graph.size();
  const std::vector<ComparisonRecord> records = graph.to_records();
  switch (algorithm) {
    case Algorithm::rc:
      return from_stationary(rank_centrality(graph));
    case Algorithm::rc_reg: {
      RankCentralityOptions options;
      options.epsilon = params.epsilon;
      return from_stationary(rank_centrality(graph, options));
    }
    case Algorithm::mle:
      return from_mle(mle_fit(n, records, 0.0));
    case Algorithm::mle_reg:
      return from_mle(mle_fit(n, records, params.lambda));
    case Algorithm::borda:
      return from_scores(borda_count(n, records));
    case Algorithm::ratio:
      return from_scores(ratio_matrix_rank(n, records, params.ratio_smoothing));
    case Algorithm::mc1:
    case Algorithm::mc2:
    case Algorithm::mc3:
    case Algorithm::mc4:
      return from_scores(
          markov_chain_baseline(n, records, variant_of(algorithm), params.ergodic_alpha));
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace rankcentrality
