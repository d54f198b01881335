#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "rankcentrality/errors.hpp"
#include "rankcentrality/random.hpp"

namespace rankcentrality {

/// Positive item weights under the Bradley-Terry-Luce model, stored as their
/// projection onto the probability simplex. Two weight vectors that differ by
/// a positive factor describe the same model and compare equal here.
class ScoreVector {
 public:
  ScoreVector() = default;

  /// Normalizes raw to sum one. Throws std::invalid_argument on an empty
  /// input or a non-positive / non-finite entry.
  explicit ScoreVector(const Eigen::Ref<const Eigen::VectorXd>& raw);

  Index size() const { return values_.size(); }
  double operator[](Index i) const { return values_[i]; }
  const Eigen::VectorXd& values() const { return values_; }

  double min() const { return values_.minCoeff(); }
  double max() const { return values_.maxCoeff(); }
  /// max_i w_i / min_j w_j, always >= 1.
  double dynamic_range() const { return max() / min(); }

 private:
  Eigen::VectorXd values_;
};

ScoreVector normalize(const Eigen::Ref<const Eigen::VectorXd>& raw);

/// Probability that j is preferred over i: w_j / (w_i + w_j).
double preference_probability(const ScoreVector& w, Index i, Index j);

/// Euclidean distance between the simplex projections of a and b.
double score_distance(const Eigen::Ref<const Eigen::VectorXd>& a,
                      const Eigen::Ref<const Eigen::VectorXd>& b);

/// n weights log-uniform on [1, b] with one item pinned at 1 and another at b,
/// so dynamic_range() == b up to rounding.
ScoreVector generate_scores(Index n, double b, Rng& rng);

/// Unordered item pair, stored with i < j.
struct Edge {
  Index i = 0;
  Index j = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// Outcome counts for one compared pair. wins_j counts comparisons in which j
/// was preferred to i.
struct ComparisonRecord {
  Index i = 0;
  Index j = 0;
  std::int64_t wins_i = 0;
  std::int64_t wins_j = 0;

  std::int64_t k() const { return wins_i + wins_j; }
  /// a_ij: fraction of comparisons won by j; 0 when the pair has no outcomes.
  double fraction() const {
    return k() > 0 ? static_cast<double>(wins_j) / static_cast<double>(k())
                   : 0.0;
  }

  friend bool operator==(const ComparisonRecord&,
                         const ComparisonRecord&) = default;
};

/// Draws k independent BTL outcomes for every edge; one record per edge, in
/// edge order and orientation.
std::vector<ComparisonRecord> sample_comparisons(const ScoreVector& w,
                                                 std::span<const Edge> edges,
                                                 std::int64_t k, Rng& rng);

}  // namespace rankcentrality
