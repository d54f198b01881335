#pragma once

#include <span>

#include <Eigen/Core>

#include "rankcentrality/btl_model.hpp"

namespace rankcentrality {

/// Log-scores theta_i = log w_i, centered to sum zero.
class ThetaVector {
 public:
  ThetaVector() = default;
  explicit ThetaVector(const Eigen::Ref<const Eigen::VectorXd>& raw)
      : values_(raw.array() - raw.mean()) {}

  Index size() const { return values_.size(); }
  const Eigen::VectorXd& values() const { return values_; }
  ScoreVector scores() const;

 private:
  Eigen::VectorXd values_;
};

struct LossAndGradient {
  double loss = 0.0;
  Eigen::VectorXd gradient;
};

/// Pairwise logistic loss averaged over the m individual comparison outcomes,
/// (1/m) sum_l [log(1 + exp(theta_j - theta_i)) - Y_l (theta_j - theta_i)],
/// and its exact gradient. theta need not be centered.
LossAndGradient mle_loss_and_gradient(const Eigen::VectorXd& theta,
                                      std::span<const ComparisonRecord> records);

struct MleOptions {
  double gradient_tol = 1e-8;
  int max_iter = 50000;
};

struct MleResult {
  ThetaVector theta;
  ScoreVector scores;
  int iterations = 0;
  double gradient_norm = 0.0;
  bool converged = false;
};

/// Maximum likelihood BTL fit by gradient descent with backtracking.
///
/// Minimizes the mean loss plus lambda / (2m) |theta|^2, i.e. the summed
/// logistic loss with ridge penalty lambda / 2 |theta|^2 divided by m. With
/// lambda == 0 the optimum is finite only when every cut of the items has
/// wins in both directions; otherwise ComputationError is thrown.
MleResult mle_fit(Index n, std::span<const ComparisonRecord> records,
                  double lambda, const MleOptions& options = {});

/// Wins of each item divided by the comparisons it took part in.
Eigen::VectorXd borda_count(Index n, std::span<const ComparisonRecord> records);

/// Leading eigenvector of the ratio matrix M_ij = (wins of i over j + s) /
/// (wins of j over i + s), M_ii = 1, normalized to the simplex. Pairs with no
/// outcomes are treated as uncompared.
Eigen::VectorXd ratio_matrix_rank(Index n, std::span<const ComparisonRecord> records,
                                  double smoothing = 0.0);

enum class MarkovVariant { MC1, MC2, MC3, MC4 };

/// Stationary distribution of one of four pairwise random-walk heuristics,
/// mixed with a uniform jump of weight ergodic_alpha. From item i:
///   MC1  uniform over neighbors that beat i at least once;
///   MC2  to j with probability proportional to j's wins over i;
///   MC3  pick one of i's comparisons uniformly, move to its winner;
///   MC4  pick a neighbor uniformly, move if it won the majority against i.
/// Rows with nowhere to go stay put.
Eigen::VectorXd markov_chain_baseline(Index n,
                                      std::span<const ComparisonRecord> records,
                                      MarkovVariant variant,
                                      double ergodic_alpha = 0.05);

}  // namespace rankcentrality
