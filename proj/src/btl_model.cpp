#include "rankcentrality/btl_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rankcentrality {
namespace {

void check_index(Index i, Index n) {
  if (i < 0 || i >= n) {
    throw std::out_of_range("item index " + std::to_string(i) +
                            " out of range for " + std::to_string(n) +
                            " items");
  }
}

}  // namespace

ScoreVector::ScoreVector(const Eigen::Ref<const Eigen::VectorXd>& raw) {
  if (raw.size() == 0) throw std::invalid_argument("empty score vector");
  for (Index i = 0; i < raw.size(); ++i) {
    if (!(raw[i] > 0.0) || !std::isfinite(raw[i])) {
      throw std::invalid_argument("score " + std::to_string(i) +
                                  " is not a positive finite number");
    }
  }
  values_ = raw / raw.sum();
}

ScoreVector normalize(const Eigen::Ref<const Eigen::VectorXd>& raw) {
  return ScoreVector(raw);
}

double preference_probability(const ScoreVector& w, Index i, Index j) {
  check_index(i, w.size());
  check_index(j, w.size());
  if (i == j) throw std::invalid_argument("an item is not compared with itself");
  return w[j] / (w[i] + w[j]);
}

double score_distance(const Eigen::Ref<const Eigen::VectorXd>& a,
                      const Eigen::Ref<const Eigen::VectorXd>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("score vectors differ in length");
  }
  return (normalize(a).values() - normalize(b).values()).norm();
}

ScoreVector generate_scores(Index n, double b, Rng& rng) {
  if (n < 2) throw std::invalid_argument("need at least two items");
  if (!(b >= 1.0) || !std::isfinite(b)) {
    throw std::invalid_argument("dynamic range b must be >= 1");
  }
  std::uniform_real_distribution<double> log_weight(0.0, std::log(b));
  Eigen::VectorXd raw(n);
  for (Index i = 0; i < n; ++i) raw[i] = std::exp(log_weight(rng));

  std::uniform_int_distribution<Index> pick(0, n - 1);
  const Index lo = pick(rng);
  Index hi = pick(rng);
  while (hi == lo) hi = pick(rng);
  raw[lo] = 1.0;
  raw[hi] = b;
  return ScoreVector(raw);
}

std::vector<ComparisonRecord> sample_comparisons(const ScoreVector& w,
                                                 std::span<const Edge> edges,
                                                 std::int64_t k, Rng& rng) {
  if (k < 0) throw std::invalid_argument("comparison count k must be >= 0");
  std::vector<ComparisonRecord> records;
  records.reserve(edges.size());
  for (const Edge& e : edges) {
    const double p = preference_probability(w, e.i, e.j);
    std::int64_t wins_j = 0;
    if (k > 0) {
      std::binomial_distribution<std::int64_t> outcome(k, p);
      wins_j = outcome(rng);
    }
    records.push_back({e.i, e.j, k - wins_j, wins_j});
  }
  return records;
}

}  // namespace rankcentrality
