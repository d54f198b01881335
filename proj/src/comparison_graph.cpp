#include "rankcentrality/comparison_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>

namespace rankcentrality {
namespace {

void check_pair(Index i, Index j, Index n) {
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::out_of_range("comparison (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") references an item outside [0, " +
                            std::to_string(n) + ")");
  }
  if (i == j) {
    throw std::invalid_argument("self-comparison of item " + std::to_string(i));
  }
}

}  // namespace

ComparisonGraph::ComparisonGraph(Index n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative item count");
  std::map<std::pair<Index, Index>, bool> seen;
  for (const Edge& e : edges) {
    check_pair(e.i, e.j, n);
    const auto key = std::minmax(e.i, e.j);
    if (seen.emplace(key, true).second) {
      edges_.push_back({key.first, key.second, 0, 0});
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  build_adjacency();
}

ComparisonGraph ComparisonGraph::from_records(
    Index n, std::span<const ComparisonRecord> records) {
  if (n < 0) throw std::invalid_argument("negative item count");
  std::map<std::pair<Index, Index>, GraphEdge> merged;
  for (const ComparisonRecord& r : records) {
    check_pair(r.i, r.j, n);
    if (r.wins_i < 0 || r.wins_j < 0) {
      throw std::invalid_argument("negative win count");
    }
    const bool flipped = r.i > r.j;
    GraphEdge& e = merged[std::minmax(r.i, r.j)];
    e.i = std::min(r.i, r.j);
    e.j = std::max(r.i, r.j);
    e.wins_i += flipped ? r.wins_j : r.wins_i;
    e.wins_j += flipped ? r.wins_i : r.wins_j;
  }
  ComparisonGraph g;
  g.n_ = n;
  g.edges_.reserve(merged.size());
  for (auto& [key, e] : merged) g.edges_.push_back(e);
  g.build_adjacency();
  return g;
}

void ComparisonGraph::build_adjacency() {
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    adjacency_[edges_[id].i].push_back({edges_[id].j, id});
    adjacency_[edges_[id].j].push_back({edges_[id].i, id});
  }
}

Index ComparisonGraph::d_min() const {
  Index d = n_ > 0 ? degree(0) : 0;
  for (Index i = 1; i < n_; ++i) d = std::min(d, degree(i));
  return d;
}

Index ComparisonGraph::d_max() const {
  Index d = 0;
  for (Index i = 0; i < n_; ++i) d = std::max(d, degree(i));
  return d;
}

EdgeList ComparisonGraph::edge_list() const {
  EdgeList out;
  out.reserve(edges_.size());
  for (const GraphEdge& e : edges_) out.push_back({e.i, e.j});
  return out;
}

std::vector<ComparisonRecord> ComparisonGraph::to_records() const {
  std::vector<ComparisonRecord> out;
  out.reserve(edges_.size());
  for (const GraphEdge& e : edges_) out.push_back({e.i, e.j, e.wins_i, e.wins_j});
  return out;
}

EdgeList erdos_renyi(Index n, double d, Rng& rng) {
  if (n < 1) throw std::invalid_argument("need at least one item");
  if (!(d >= 0.0) || d > static_cast<double>(n)) {
    throw std::invalid_argument("average degree d must lie in [0, n]");
  }
  std::bernoulli_distribution include(d / static_cast<double>(n));
  EdgeList edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (include(rng)) edges.push_back({i, j});
    }
  }
  return edges;
}

Eigen::SparseMatrix<double, Eigen::RowMajor> laplacian(
    const ComparisonGraph& graph) {
  const Index n = graph.size();
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(2 * graph.edges().size());
  for (Index i = 0; i < n; ++i) {
    const Index d = graph.degree(i);
    if (d == 0) {
      throw std::invalid_argument("item " + std::to_string(i) +
                                  " has no comparisons");
    }
    for (const auto& nb : graph.neighbors(i)) {
      entries.emplace_back(i, nb.item, 1.0 / static_cast<double>(d));
    }
  }
  Eigen::SparseMatrix<double, Eigen::RowMajor> walk(n, n);
  walk.setFromTriplets(entries.begin(), entries.end());
  return walk;
}

SpectralSummary spectral_gap(const ComparisonGraph& graph) {
  const Index n = graph.size();
  if (n < 2) throw std::invalid_argument("spectral gap needs at least two items");

  Eigen::VectorXd inv_sqrt_degree(n);
  for (Index i = 0; i < n; ++i) {
    if (graph.degree(i) == 0) {
      throw std::invalid_argument("item " + std::to_string(i) +
                                  " has no comparisons");
    }
    inv_sqrt_degree[i] = 1.0 / std::sqrt(static_cast<double>(graph.degree(i)));
  }
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
  for (const GraphEdge& e : graph.edges()) {
    const double v = inv_sqrt_degree[e.i] * inv_sqrt_degree[e.j];
    sym(e.i, e.j) = v;
    sym(e.j, e.i) = v;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  // Ascending from the solver; reported descending.
  SpectralSummary s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.lambda_2 = s.eigenvalues[1];
  s.lambda_n = s.eigenvalues[n - 1];
  s.lambda_max = std::max(s.lambda_2, -s.lambda_n);
  s.d_min = graph.d_min();
  s.d_max = graph.d_max();
  s.kappa = static_cast<double>(s.d_max) / static_cast<double>(s.d_min);
  s.components = connected_components(graph);
  s.xi = s.connected() ? std::clamp(1.0 - s.lambda_max, 0.0, 1.0) : 0.0;
  return s;
}

std::vector<std::vector<Index>> connected_components(
    const ComparisonGraph& graph) {
  const Index n = graph.size();
  std::vector<Index> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Index>> components;
  std::vector<Index> stack;
  for (Index root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    const Index id = static_cast<Index>(components.size());
    components.emplace_back();
    label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      components[id].push_back(v);
      for (const auto& nb : graph.neighbors(v)) {
        if (label[nb.item] < 0) {
          label[nb.item] = id;
          stack.push_back(nb.item);
        }
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }
  return components;
}

}  // namespace rankcentrality
