#include "rankcentrality/synthetic.hpp"

namespace rankcentrality {

EdgeList complete_graph(Index n) {
  EdgeList edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return edges;
}

bool is_connected(Index n, std::span<const Edge> edges) {
  return connected_components(ComparisonGraph(n, edges)).size() == 1;
}

SyntheticInstance make_instance(Index n, double b, double d, std::int64_t k,
                                const InstanceSeeds& seeds, int max_resamples) {
  SyntheticInstance inst;
  Rng score_rng(seeds.scores);
  inst.truth = generate_scores(n, b, score_rng);

  EdgeList edges;
  if (d >= static_cast<double>(n)) {
    edges = complete_graph(n);
  } else {
    for (int attempt = 0;; ++attempt) {
      if (attempt > max_resamples) {
        throw ComputationError("could not draw a connected Erdos-Renyi graph");
      }
      Rng graph_rng(derive_seed(seeds.graph, {static_cast<std::uint64_t>(attempt)}));
      edges = erdos_renyi(n, d, graph_rng);
      if (is_connected(n, edges)) break;
      ++inst.resampled;
    }
  }
  Rng outcome_rng(seeds.outcomes);
  const auto records = sample_comparisons(inst.truth, edges, k, outcome_rng);
  inst.graph = ComparisonGraph::from_records(n, records);
  return inst;
}


InstanceSeeds sweep_seeds(std::uint64_t seed, bool vary_graph,
                          std::size_t grid_index, int trial) {
  const auto t = static_cast<std::uint64_t>(trial);
  const auto g = static_cast<std::uint64_t>(grid_index);
  InstanceSeeds s;
  s.scores = derive_seed(seed, {label_hash("scores"), t});
  s.graph = vary_graph ? derive_seed(seed, {label_hash("graph"), g, t})
                       : derive_seed(seed, {label_hash("graph"), t});
  s.outcomes = derive_seed(seed, {label_hash("outcomes"), g, t});
  return s;
}

}  // namespace rankcentrality
