#include "rankcentrality/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace rankcentrality {

Ordering rank_from_scores(const Eigen::Ref<const Eigen::VectorXd>& scores) {
  const Index n = scores.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return scores[a] > scores[b]; });
  Ordering sigma;
  sigma.position.resize(static_cast<std::size_t>(n));
  for (Index r = 0; r < n; ++r) sigma.position[order[r]] = r + 1;
  return sigma;
}

double dw_error(const ScoreVector& w, const Ordering& sigma) {
  const Index n = w.size();
  if (sigma.size() != n) throw std::invalid_argument("ordering length mismatch");
  double sum = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double dw = w[i] - w[j];
      const double ds = static_cast<double>(sigma.position[i] - sigma.position[j]);
      if (dw * ds > 0.0) sum += dw * dw;
    }
  }
  return std::sqrt(sum / (2.0 * static_cast<double>(n) * w.values().squaredNorm()));
}

double l1_displacement(const Ordering& a, const Ordering& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ordering length mismatch");
  if (a.size() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < a.position.size(); ++i) {
    total += std::abs(static_cast<double>(a.position[i] - b.position[i]));
  }
  return total / static_cast<double>(a.size());
}

double normalized_error(const Eigen::Ref<const Eigen::VectorXd>& pi,
                        const Eigen::Ref<const Eigen::VectorXd>& truth) {
  if (pi.size() != truth.size()) throw std::invalid_argument("length mismatch");
  return (pi - truth).norm() / truth.norm();
}

double rmse(std::span<const double> trial_errors) {
  if (trial_errors.empty()) throw std::invalid_argument("no trials");
  return std::accumulate(trial_errors.begin(), trial_errors.end(), 0.0) /
         static_cast<double>(trial_errors.size());
}

FisherMatrix fisher_information(const ScoreVector& truth, std::span<const Edge> edges,
                                std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const Index n = truth.size();
  FisherMatrix f;
  f.k = k;
  f.matrix = Eigen::MatrixXd::Zero(n, n);
  const double kd = static_cast<double>(k);
  for (const Edge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n || e.i == e.j) {
      throw std::invalid_argument("invalid edge in Fisher information");
    }
    const double pi = truth[e.i];
    const double pj = truth[e.j];
    const double c = kd / ((pi + pj) * (pi + pj));
    f.matrix(e.i, e.j) -= c;
    f.matrix(e.j, e.i) -= c;
    f.matrix(e.i, e.i) += c * pj / pi;
    f.matrix(e.j, e.j) += c * pi / pj;
    f.edges.push_back({std::min(e.i, e.j), std::max(e.i, e.j)});
  }
  return f;
}

CramerRaoBound cramer_rao_bound(const FisherMatrix& fisher) {
  const Eigen::MatrixXd& m = fisher.matrix;
  if (m.rows() != m.cols()) throw std::invalid_argument("Fisher matrix not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("Fisher matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  if (ev.minCoeff() < -1e-9 * std::max(1.0, top)) {
    throw std::invalid_argument("Fisher matrix has a negative eigenvalue");
  }
  CramerRaoBound bound;
  const double cutoff = 1e-10 * top;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > cutoff) {
      bound.trace += 1.0 / ev[i];
    } else {
      ++bound.rank_deficiency;
    }
  }
  return bound;
}

}  // namespace rankcentrality
