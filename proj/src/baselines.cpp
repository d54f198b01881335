#include "rankcentrality/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rankcentrality/comparison_graph.hpp"
#include "rankcentrality/rank_centrality.hpp"

namespace rankcentrality {
namespace {

// log(1 + e^x) without overflow.
double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

std::int64_t total_comparisons(std::span<const ComparisonRecord> records) {
  std::int64_t m = 0;
  for (const auto& r : records) m += r.k();
  return m;
}

// Is every item reachable from every other along "beaten by" arcs i -> j
// (j won against i at least once)? Equivalent to each cut having wins in both
// directions, the existence condition for the unregularized MLE.
bool wins_strongly_connected(const ComparisonGraph& g) {
  const Index n = g.size();
  if (n <= 1) return true;
  auto sweep = [&](bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Index> stack{0};
    seen[0] = 1;
    Index count = 1;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        const GraphEdge& e = g.edges()[nb.edge];
        const bool arc = forward ? e.wins_of(nb.item) > 0 : e.wins_of(v) > 0;
        if (arc && !seen[nb.item]) {
          seen[nb.item] = 1;
          ++count;
          stack.push_back(nb.item);
        }
      }
    }
    return count == n;
  };
  return sweep(true) && sweep(false);
}

}  // namespace

ScoreVector ThetaVector::scores() const {
  return ScoreVector((values_.array() - values_.maxCoeff()).exp().matrix());
}

LossAndGradient mle_loss_and_gradient(const Eigen::VectorXd& theta,
                                      std::span<const ComparisonRecord> records) {
  const std::int64_t m = total_comparisons(records);
  if (records.empty() || m == 0) {
    throw std::invalid_argument("no comparison outcomes to fit");
  }
  LossAndGradient out;
  out.gradient = Eigen::VectorXd::Zero(theta.size());
  for (const auto& r : records) {
    if (r.i < 0 || r.j < 0 || r.i >= theta.size() || r.j >= theta.size()) {
      throw std::out_of_range("record references an item outside theta");
    }
    const double x = theta[r.j] - theta[r.i];
    const double k = static_cast<double>(r.k());
    out.loss += k * softplus(x) - static_cast<double>(r.wins_j) * x;
    const double residual = k * logistic(x) - static_cast<double>(r.wins_j);
    out.gradient[r.j] += residual;
    out.gradient[r.i] -= residual;
  }
  out.loss /= static_cast<double>(m);
  out.gradient /= static_cast<double>(m);
  return out;
}

MleResult mle_fit(Index n, std::span<const ComparisonRecord> records,
                  double lambda, const MleOptions& options) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be >= 0");
  if (n < 1) throw std::invalid_argument("no items to fit");
  const ComparisonGraph graph = ComparisonGraph::from_records(n, records);
  if (lambda == 0.0 && !wins_strongly_connected(graph)) {
    throw ComputationError(
        "maximum likelihood estimate diverges: some group of items never lost "
        "(or never won) against the rest; use a positive lambda");
  }
  const double ridge = lambda / static_cast<double>(total_comparisons(records));

  auto objective = [&](const Eigen::VectorXd& theta) {
    LossAndGradient f = mle_loss_and_gradient(theta, records);
    f.loss += 0.5 * ridge * theta.squaredNorm();
    f.gradient += ridge * theta;
    return f;
  };

  MleResult result;
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(n);
  LossAndGradient f = objective(theta);
  double step = 1.0;
  int it = 0;
  for (; it < options.max_iter; ++it) {
    const double gnorm2 = f.gradient.squaredNorm();
    if (std::sqrt(gnorm2) < options.gradient_tol) break;
    step *= 2.0;
    Eigen::VectorXd trial;
    LossAndGradient ft;
    for (;;) {
      trial = theta - step * f.gradient;
      ft = objective(trial);
      if (ft.loss <= f.loss - 0.5 * step * gnorm2 || step < 1e-300) break;
      step *= 0.5;
    }
    if (!(ft.loss <= f.loss)) break;  // rounding floor reached
    theta.swap(trial);
    f = std::move(ft);
  }
  result.iterations = it;
  result.gradient_norm = f.gradient.norm();
  result.converged = result.gradient_norm < options.gradient_tol;
  result.theta = ThetaVector(theta);
  result.scores = result.theta.scores();
  return result;
}

Eigen::VectorXd borda_count(Index n, std::span<const ComparisonRecord> records) {
  Eigen::VectorXd wins = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd played = Eigen::VectorXd::Zero(n);
  for (const auto& r : records) {
    if (r.i < 0 || r.j < 0 || r.i >= n || r.j >= n) {
      throw std::out_of_range("record references an item outside [0, n)");
    }
    wins[r.i] += static_cast<double>(r.wins_i);
    wins[r.j] += static_cast<double>(r.wins_j);
    played[r.i] += static_cast<double>(r.k());
    played[r.j] += static_cast<double>(r.k());
  }
  for (Index i = 0; i < n; ++i) {
    if (played[i] == 0.0) {
      throw ComputationError("item " + std::to_string(i) +
                             " took part in no comparisons");
    }
  }
  return wins.cwiseQuotient(played);
}

Eigen::VectorXd ratio_matrix_rank(Index n, std::span<const ComparisonRecord> records,
                                  double smoothing) {
  if (!(smoothing >= 0.0)) throw std::invalid_argument("smoothing must be >= 0");
  std::vector<ComparisonRecord> compared;
  for (const auto& r : records) {
    if (r.k() > 0) compared.push_back(r);
  }
  const ComparisonGraph graph = ComparisonGraph::from_records(n, compared);
  const auto components = connected_components(graph);
  if (components.size() > 1) {
    throw DisconnectedGraphError("ratio matrix needs a connected comparison graph",
                                 components);
  }

  std::vector<Eigen::Triplet<double>> entries;
  for (Index i = 0; i < n; ++i) entries.emplace_back(i, i, 1.0);
  for (const GraphEdge& e : graph.edges()) {
    const double wi = static_cast<double>(e.wins_i) + smoothing;
    const double wj = static_cast<double>(e.wins_j) + smoothing;
    if (wi == 0.0 || wj == 0.0) {
      throw ComputationError("ratio matrix has a zero denominator on pair (" +
                             std::to_string(e.i) + ", " + std::to_string(e.j) +
                             "); use positive smoothing");
    }
    entries.emplace_back(e.i, e.j, wi / wj);
    entries.emplace_back(e.j, e.i, wj / wi);
  }
  Eigen::SparseMatrix<double, Eigen::RowMajor> m(n, n);
  m.setFromTriplets(entries.begin(), entries.end());

  // Irreducible with a positive diagonal, so the power method converges to
  // the Perron vector.
  Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < 100000; ++it) {
    Eigen::VectorXd next = m * v;
    next /= next.sum();
    const double change = (next - v).lpNorm<1>();
    v.swap(next);
    if (change < 1e-13) break;
  }
  return v;
}

Eigen::VectorXd markov_chain_baseline(Index n,
                                      std::span<const ComparisonRecord> records,
                                      MarkovVariant variant, double ergodic_alpha) {
  if (!(ergodic_alpha >= 0.0 && ergodic_alpha <= 1.0)) {
    throw std::invalid_argument("ergodic_alpha must lie in [0, 1]");
  }
  const ComparisonGraph graph = ComparisonGraph::from_records(n, records);
  Eigen::MatrixXd base = Eigen::MatrixXd::Zero(n, n);

  for (Index i = 0; i < n; ++i) {
    const auto nbs = graph.neighbors(i);
    double total = 0.0;
    for (const auto& nb : nbs) {
      const GraphEdge& e = graph.edges()[nb.edge];
      const double lost_to = static_cast<double>(e.wins_of(nb.item));
      double weight = 0.0;
      switch (variant) {
        case MarkovVariant::MC1:
          weight = lost_to > 0.0 ? 1.0 : 0.0;
          break;
        case MarkovVariant::MC2:
        case MarkovVariant::MC3:
          weight = lost_to;
          break;
        case MarkovVariant::MC4:
          weight = e.wins_of(nb.item) > e.wins_of(i) ? 1.0 : 0.0;
          break;
      }
      base(i, nb.item) = weight;
      if (variant == MarkovVariant::MC3) {
        total += static_cast<double>(e.k());
      } else if (variant == MarkovVariant::MC4) {
        total += 1.0;
      } else {
        total += weight;
      }
    }
    if (total > 0.0) base.row(i) /= total;
    base(i, i) = std::max(0.0, 1.0 - (base.row(i).sum() - base(i, i)));
  }

  Eigen::MatrixXd mixed =
      (1.0 - ergodic_alpha) * base +
      Eigen::MatrixXd::Constant(n, n, ergodic_alpha / static_cast<double>(n));
  const TransitionMatrix chain(mixed.sparseView(), 0);
  if (!chain.irreducible()) {
    throw ComputationError(
        "Markov-chain baseline is not ergodic on this data; use a positive "
        "ergodic_alpha");
  }
  const Eigen::VectorXd uniform =
      Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  const StationaryResult r =
      power_iterate(chain, uniform, 1e-12, static_cast<int>(100 * n + 10000));
  if (!r.converged) {
    throw ComputationError("Markov-chain baseline did not converge");
  }
  return r.pi;
}

}  // namespace rankcentrality
