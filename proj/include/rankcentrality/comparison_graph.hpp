#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "rankcentrality/btl_model.hpp"

namespace rankcentrality {

/// Aggregated outcomes on one unordered pair, oriented i < j.
struct GraphEdge {
  Index i = 0;
  Index j = 0;
  std::int64_t wins_i = 0;
  std::int64_t wins_j = 0;

  std::int64_t k() const { return wins_i + wins_j; }
  std::int64_t wins_of(Index item) const { return item == i ? wins_i : wins_j; }
  Index other(Index item) const { return item == i ? j : i; }
  /// Fraction of this pair's comparisons won by `item`; 0 when k == 0.
  double fraction_won_by(Index item) const {
    return k() > 0 ? static_cast<double>(wins_of(item)) /
                         static_cast<double>(k())
                   : 0.0;
  }
};

/// G = ([n], E, A): items, compared pairs, and their win counts.
/// Immutable once built.
class ComparisonGraph {
 public:
  struct Neighbor {
    Index item;
    std::size_t edge;
  };

  /// Topology only; every edge carries zero outcomes.
  ComparisonGraph(Index n, std::span<const Edge> edges);

  /// Sums duplicate records per pair regardless of orientation.
  static ComparisonGraph from_records(Index n,
                                      std::span<const ComparisonRecord> records);

  Index size() const { return n_; }
  std::span<const GraphEdge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(Index i) const { return adjacency_[i]; }

  /// Number of distinct comparison partners.
  Index degree(Index i) const {
    return static_cast<Index>(adjacency_[i].size());
  }
  Index d_min() const;
  Index d_max() const;

  EdgeList edge_list() const;
  std::vector<ComparisonRecord> to_records() const;

 private:
  ComparisonGraph() = default;
  void build_adjacency();

  Index n_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Each of the n(n-1)/2 pairs independently with probability d/n.
EdgeList erdos_renyi(Index n, double d, Rng& rng);

/// Simple random walk D^{-1}B. Throws std::invalid_argument on an isolated
/// vertex.
Eigen::SparseMatrix<double, Eigen::RowMajor> laplacian(
    const ComparisonGraph& graph);

struct SpectralSummary {
  double lambda_2 = 0.0;
  double lambda_n = 0.0;
  double lambda_max = 0.0;
  /// 1 - lambda_max; forced to 0 for disconnected graphs.
  double xi = 0.0;
  Index d_min = 0;
  Index d_max = 0;
  double kappa = 1.0;
  /// Full walk spectrum, descending.
  Eigen::VectorXd eigenvalues;
  std::vector<std::vector<Index>> components;

  bool connected() const { return components.size() <= 1; }
};

/// Spectrum of D^{-1/2} B D^{-1/2}, which shares its eigenvalues with the
/// walk D^{-1}B. Dense; meant for n up to a few thousand.
SpectralSummary spectral_gap(const ComparisonGraph& graph);

/// Components ordered by smallest member; members ascending.
std::vector<std::vector<Index>> connected_components(
    const ComparisonGraph& graph);

}  // namespace rankcentrality
