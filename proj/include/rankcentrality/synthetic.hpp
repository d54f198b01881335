#pragma once

#include <cstdint>
#include <vector>

#include "rankcentrality/btl_model.hpp"
#include "rankcentrality/comparison_graph.hpp"

namespace rankcentrality {

/// Independent streams for the three random ingredients of an instance.
/// Sharing `scores` (and `graph`) across grid points gives paired samples.
struct InstanceSeeds {
  std::uint64_t scores = 0;
  std::uint64_t graph = 0;
  std::uint64_t outcomes = 0;
};

struct SyntheticInstance {
  ScoreVector truth;
  ComparisonGraph graph{0, {}};
  /// Erdos-Renyi draws rejected for being disconnected.
  int resampled = 0;
};

/// BTL scores of dynamic range b on a connected Erdos-Renyi(n, d) graph with
/// k outcomes per edge. d == n yields the complete graph. Throws
/// ComputationError after max_resamples disconnected draws.
SyntheticInstance make_instance(Index n, double b, double d, std::int64_t k,
                                const InstanceSeeds& seeds, int max_resamples = 100);

/// Complete-graph edge list.
EdgeList complete_graph(Index n);

bool is_connected(Index n, std::span<const Edge> edges);

/// Seeds for trial `trial` at grid position `grid_index` of a sweep. Scores
/// depend on the trial only; the graph also depends on the grid position when
/// the swept parameter changes it (vary_graph), so sweeps over k reuse one
/// graph per trial.
InstanceSeeds sweep_seeds(std::uint64_t seed, bool vary_graph,
                          std::size_t grid_index, int trial);

}  // namespace rankcentrality
