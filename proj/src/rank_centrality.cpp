#include "rankcentrality/rank_centrality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rankcentrality {
namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

// Adds self-loops so each row sums to one. Off-diagonal mass per row is at
// most 1 by the 1/d_max scaling; tiny negative rounding is clamped.
TransitionMatrix assemble(Index n, Triplets entries, Index d_max) {
  Eigen::VectorXd row_mass = Eigen::VectorXd::Zero(n);
  for (const auto& t : entries) row_mass[t.row()] += t.value();
  for (Index i = 0; i < n; ++i) {
    entries.emplace_back(i, i, std::max(0.0, 1.0 - row_mass[i]));
  }
  TransitionMatrix::Storage p(n, n);
  p.setFromTriplets(entries.begin(), entries.end());
  p.prune(0.0);
  return TransitionMatrix(std::move(p), d_max);
}

void require_no_isolated(const ComparisonGraph& graph) {
  for (Index i = 0; i < graph.size(); ++i) {
    if (graph.degree(i) == 0) {
      throw std::invalid_argument("item " + std::to_string(i) +
                                  " has no comparisons");
    }
  }
}

bool reaches_all(const TransitionMatrix::Storage& m) {
  const Index n = m.rows();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Index> stack{0};
  seen[0] = 1;
  Index count = 1;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (TransitionMatrix::Storage::InnerIterator it(m, v); it; ++it) {
      if (it.value() > 0.0 && !seen[it.col()]) {
        seen[it.col()] = 1;
        ++count;
        stack.push_back(it.col());
      }
    }
  }
  return count == n;
}

std::string describe_components(const std::vector<std::vector<Index>>& parts) {
  std::ostringstream out;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    out << (c ? " " : "") << "{";
    for (std::size_t m = 0; m < parts[c].size(); ++m) {
      out << (m ? "," : "") << parts[c][m];
    }
    out << "}";
  }
  return out.str();
}

}  // namespace

TransitionMatrix::TransitionMatrix(Storage p, Index d_max)
    : p_(std::move(p)), d_max_(d_max) {
  if (p_.rows() != p_.cols()) {
    throw std::invalid_argument("transition matrix must be square");
  }
  for (Index i = 0; i < p_.outerSize(); ++i) {
    double sum = 0.0;
    for (Storage::InnerIterator it(p_, i); it; ++it) {
      if (!(it.value() >= 0.0)) {
        throw std::invalid_argument("negative transition probability in row " +
                                    std::to_string(i));
      }
      sum += it.value();
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("row " + std::to_string(i) +
                                  " of the transition matrix does not sum to 1");
    }
  }
}

Eigen::VectorXd TransitionMatrix::step(const Eigen::VectorXd& p) const {
  return p_.transpose() * p;
}

bool TransitionMatrix::irreducible() const {
  if (size() <= 1) return true;
  Storage transposed = p_.transpose();
  return reaches_all(p_) && reaches_all(transposed);
}

TransitionMatrix build_transition(const ComparisonGraph& graph) {
  require_no_isolated(graph);
  const double scale = 1.0 / static_cast<double>(graph.d_max());
  Triplets entries;
  entries.reserve(2 * graph.edges().size() + static_cast<std::size_t>(graph.size()));
  for (const GraphEdge& e : graph.edges()) {
    if (e.k() == 0) {
      throw std::invalid_argument(
          "pair (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
          ") has no recorded comparisons; use a positive epsilon");
    }
    // a_ij + a_ji = 1 for fractions of the same pair, so A_ij = a_ij.
    entries.emplace_back(e.i, e.j, scale * e.fraction_won_by(e.j));
    entries.emplace_back(e.j, e.i, scale * e.fraction_won_by(e.i));
  }
  return assemble(graph.size(), std::move(entries), graph.d_max());
}

TransitionMatrix build_transition_regularized(const ComparisonGraph& graph,
                                              double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (epsilon == 0.0) return build_transition(graph);
  require_no_isolated(graph);
  const double scale = 1.0 / static_cast<double>(graph.d_max());
  Triplets entries;
  for (const GraphEdge& e : graph.edges()) {
    const double a_ij = e.fraction_won_by(e.j);
    const double a_ji = e.fraction_won_by(e.i);
    const double denom = a_ij + a_ji + 2.0 * epsilon;
    entries.emplace_back(e.i, e.j, scale * (a_ij + epsilon) / denom);
    entries.emplace_back(e.j, e.i, scale * (a_ji + epsilon) / denom);
  }
  return assemble(graph.size(), std::move(entries), graph.d_max());
}

TransitionMatrix ideal_transition(const ScoreVector& w, std::span<const Edge> edges) {
  const ComparisonGraph graph(w.size(), edges);
  require_no_isolated(graph);
  const double scale = 1.0 / static_cast<double>(graph.d_max());
  Triplets entries;
  for (const GraphEdge& e : graph.edges()) {
    entries.emplace_back(e.i, e.j, scale * preference_probability(w, e.i, e.j));
    entries.emplace_back(e.j, e.i, scale * preference_probability(w, e.j, e.i));
  }
  return assemble(graph.size(), std::move(entries), graph.d_max());
}

StationaryResult power_iterate(const TransitionMatrix& p,
                               const Eigen::VectorXd& p0, double tol,
                               int max_iter) {
  if (p0.size() != p.size()) {
    throw std::invalid_argument("initial distribution has the wrong length");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if ((p0.array() < 0.0).any() || std::abs(p0.sum() - 1.0) > 1e-9) {
    throw std::invalid_argument("initial vector is not a probability distribution");
  }

  StationaryResult result;
  Eigen::VectorXd current = p0;
  for (int t = 1; t <= max_iter; ++t) {
    Eigen::VectorXd next = p.step(current);
    next /= next.sum();
    result.residual = (next - current).lpNorm<1>();
    result.iterations = t;
    current.swap(next);
    if (result.residual < tol) {
      result.converged = true;
      break;
    }
  }
  result.pi = current;
  if (!p.irreducible()) {
    result.warnings.push_back(
        "chain is reducible (zero spectral gap): the stationary distribution "
        "is not unique and depends on the starting vector");
  }
  return result;
}

StationaryResult rank_centrality(const ComparisonGraph& graph,
                                 const RankCentralityOptions& options) {
  const Index n = graph.size();
  if (n == 0) throw std::invalid_argument("no items to rank");
  const auto components = connected_components(graph);
  if (components.size() > 1) {
    throw DisconnectedGraphError(
        "comparison graph is disconnected; scores are not comparable across "
        "components: " + describe_components(components),
        components);
  }
  const TransitionMatrix p = options.epsilon > 0.0
                                 ? build_transition_regularized(graph, options.epsilon)
                                 : build_transition(graph);
  if (!p.irreducible()) {
    throw ComputationError(
        "random walk is reducible: some items never won (or never lost) "
        "against the rest; use a positive epsilon to regularize");
  }
  const int max_iter =
      options.max_iter > 0 ? options.max_iter : static_cast<int>(10 * n + 1000);
  const Eigen::VectorXd uniform =
      Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  return power_iterate(p, uniform, options.tol, max_iter);
}

}  // namespace rankcentrality
