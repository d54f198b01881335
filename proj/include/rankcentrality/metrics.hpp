#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "rankcentrality/btl_model.hpp"

namespace rankcentrality {

/// position[i] is the 1-based rank of item i; 1 is the highest score.
struct Ordering {
  std::vector<Index> position;

  Index size() const { return static_cast<Index>(position.size()); }
  friend bool operator==(const Ordering&, const Ordering&) = default;
};

/// Descending by score; equal scores keep ascending item order.
Ordering rank_from_scores(const Eigen::Ref<const Eigen::VectorXd>& scores);

/// Weighted disagreement between the true weights and an ordering:
/// sqrt( sum_{i<j} (w_i - w_j)^2 [ (w_i - w_j)(sigma_i - sigma_j) > 0 ]
///       / (2 n |w|^2) ).
/// The indicator fires when the heavier item got the worse (larger) position.
double dw_error(const ScoreVector& w, const Ordering& sigma);

/// (1/n) sum_i |a(i) - b(i)|.
double l1_displacement(const Ordering& a, const Ordering& b);

/// |pi - truth| / |truth|.
double normalized_error(const Eigen::Ref<const Eigen::VectorXd>& pi,
                        const Eigen::Ref<const Eigen::VectorXd>& truth);

/// Arithmetic mean of per-trial normalized errors (the plotted "RMSE").
double rmse(std::span<const double> trial_errors);

struct FisherMatrix {
  Eigen::MatrixXd matrix;
  std::int64_t k = 0;
  EdgeList edges;
};

/// Fisher information of the BTL weights under k comparisons per edge.
FisherMatrix fisher_information(const ScoreVector& truth, std::span<const Edge> edges,
                                std::int64_t k);

struct CramerRaoBound {
  /// Trace of the Moore-Penrose pseudo-inverse.
  double trace = 0.0;
  /// Eigenvalues treated as zero (below 1e-10 * lambda_max).
  Index rank_deficiency = 0;
};

/// Throws std::invalid_argument if F is not symmetric or has an eigenvalue
/// below -1e-9 (scaled by the largest eigenvalue magnitude).
CramerRaoBound cramer_rao_bound(const FisherMatrix& fisher);

}  // namespace rankcentrality
