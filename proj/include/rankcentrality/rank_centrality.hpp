#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "rankcentrality/btl_model.hpp"
#include "rankcentrality/comparison_graph.hpp"

namespace rankcentrality {

/// Row-stochastic random-walk matrix. Built by the factories below; the
/// constructor only validates.
class TransitionMatrix {
 public:
  using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor>;

  /// Throws std::invalid_argument unless square, entries >= 0 and every row
  /// sums to 1 within 1e-12. d_max is the degree used to scale the off-diagonal
  /// entries, or 0 when the chain does not come from a comparison graph.
  TransitionMatrix(Storage p, Index d_max);

  Index size() const { return p_.rows(); }
  Index d_max() const { return d_max_; }
  const Storage& matrix() const { return p_; }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(p_); }
  double operator()(Index i, Index j) const { return p_.coeff(i, j); }

  /// One step of the walk: returns (p^T P)^T.
  Eigen::VectorXd step(const Eigen::VectorXd& p) const;

  /// Whether the positive off-diagonal support is strongly connected, i.e.
  /// the chain is irreducible.
  bool irreducible() const;

 private:
  Storage p_;
  Index d_max_;
};

/// P_ij = A_ij / d_max with A_ij = a_ij / (a_ij + a_ji), self-loops completing
/// each row. Throws std::invalid_argument on an edge with no comparisons or an
/// isolated item.
TransitionMatrix build_transition(const ComparisonGraph& graph);

/// Beta(eps, eps) smoothing of the win fractions:
/// P_ij = (a_ij + eps) / (a_ij + a_ji + 2 eps) / d_max.
TransitionMatrix build_transition_regularized(const ComparisonGraph& graph,
                                              double epsilon);

/// The k -> infinity chain: P_ij = w_j / (w_i + w_j) / d_max on edges.
TransitionMatrix ideal_transition(const ScoreVector& w, std::span<const Edge> edges);

struct StationaryResult {
  /// Probability vector; entries may be zero when the chain is reducible.
  Eigen::VectorXd pi;
  int iterations = 0;
  /// L1 change of the last step.
  double residual = 0.0;
  bool converged = false;
  std::vector<std::string> warnings;
};

/// Iterates p <- p^T P from p0 until the L1 step change drops below tol or
/// max_iter steps have run. Running out of iterations is reported through
/// `converged`, not thrown.
StationaryResult power_iterate(const TransitionMatrix& p,
                               const Eigen::VectorXd& p0, double tol,
                               int max_iter);

struct RankCentralityOptions {
  /// Beta prior pseudo-count; 0 is the plain algorithm.
  double epsilon = 0.0;
  double tol = 1e-10;
  /// 0 selects 10 n + 1000.
  int max_iter = 0;
};

/// Scores items by the stationary distribution of the comparison random walk,
/// started from the uniform distribution.
///
/// Throws DisconnectedGraphError (with the component partition) when the
/// comparison graph is disconnected, and ComputationError when the walk is
/// reducible because some items never won against a neighbor; a positive
/// epsilon resolves the latter.
StationaryResult rank_centrality(const ComparisonGraph& graph,
                                 const RankCentralityOptions& options = {});

}  // namespace rankcentrality
