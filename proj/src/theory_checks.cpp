#include "rankcentrality/theory_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "parallel.hpp"
#include "rankcentrality/metrics.hpp"
#include "rankcentrality/synthetic.hpp"

namespace rankcentrality {

Eigen::VectorXd reversible_spectrum(const Eigen::MatrixXd& p, const Eigen::VectorXd& pi) {
  if (p.rows() != p.cols() || p.rows() != pi.size()) {
    throw std::invalid_argument("chain and stationary vector disagree in size");
  }
  const Eigen::ArrayXd root = pi.array().sqrt();
  Eigen::MatrixXd s = root.matrix().asDiagonal() * p * root.inverse().matrix().asDiagonal();
  s = 0.5 * (s + s.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

double second_eigenvalue_modulus(const Eigen::MatrixXd& p, const Eigen::VectorXd& pi) {
  const Eigen::VectorXd ev = reversible_spectrum(p, pi);
  if (ev.size() < 2) return 0.0;
  return std::max(ev[1], -ev[ev.size() - 1]);
}

double detailed_balance_residual(const TransitionMatrix& p, const Eigen::VectorXd& pi) {
  if (pi.size() != p.size()) throw std::invalid_argument("length mismatch");
  const Eigen::MatrixXd flow = pi.asDiagonal() * p.dense();
  return (flow - flow.transpose()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd simple_walk_stationary(const ComparisonGraph& graph) {
  Eigen::VectorXd mu(graph.size());
  for (Index i = 0; i < graph.size(); ++i) mu[i] = static_cast<double>(graph.degree(i));
  return mu / mu.sum();
}

double perturbation_norm(const TransitionMatrix& p, const TransitionMatrix& ideal) {
  if (p.size() != ideal.size()) throw std::invalid_argument("dimension mismatch");
  const Eigen::MatrixXd delta = p.dense() - ideal.dense();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(delta);
  return svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
}

PerturbationReport check_spectral_gap_bound(const ScoreVector& w,
                                            const ComparisonGraph& graph) {
  if (w.size() != graph.size()) throw std::invalid_argument("size mismatch");
  const SpectralSummary walk = spectral_gap(graph);
  if (!walk.connected()) {
    throw DisconnectedGraphError("spectral-gap bound needs a connected graph",
                                 walk.components);
  }
  PerturbationReport r;
  r.xi = walk.xi;
  r.b = w.dynamic_range();
  r.d_min = walk.d_min;
  r.d_max = walk.d_max;
  r.kappa = walk.kappa;
  const TransitionMatrix ideal = ideal_transition(w, graph.edge_list());
  r.lambda_max_ideal = second_eigenvalue_modulus(ideal.dense(), w.values());
  r.gap_lhs = 1.0 - r.lambda_max_ideal;
  r.gap_rhs = r.xi * static_cast<double>(r.d_min) /
              (r.b * r.b * static_cast<double>(r.d_max));
  r.gap_bound_holds = r.gap_lhs >= r.gap_rhs - 1e-12;
  return r;
}

PerturbationReport check_perturbation(const ScoreVector& w,
                                      const ComparisonGraph& sampled,
                                      const Eigen::VectorXd& p0, int steps) {
  PerturbationReport r = check_spectral_gap_bound(w, sampled);
  const TransitionMatrix p = build_transition(sampled);
  const TransitionMatrix ideal = ideal_transition(w, sampled.edge_list());
  r.delta_norm = perturbation_norm(p, ideal);
  const double spread = std::sqrt(w.max() / w.min());
  r.rho = r.lambda_max_ideal + r.delta_norm * spread;
  r.rho_below_one = r.rho < 1.0;

  const Eigen::VectorXd& truth = w.values();
  const double truth_norm = truth.norm();
  const double start = (p0 - truth).norm() / truth_norm;
  const double floor =
      r.rho_below_one ? r.delta_norm * spread / (1.0 - r.rho)
                      : std::numeric_limits<double>::infinity();
  Eigen::VectorXd current = p0;
  bool holds = r.rho_below_one;
  for (int t = 0; t <= steps; ++t) {
    if (t > 0) current = p.step(current);
    const double err = (current - truth).norm() / truth_norm;
    const double envelope = std::pow(r.rho, t) * start * spread + floor;
    r.trajectory_error.push_back(err);
    r.trajectory_envelope.push_back(envelope);
    if (!(err <= envelope + 1e-9)) holds = false;
  }
  r.trajectory_bound_holds = holds;
  return r;
}

DirichletReport dirichlet_comparison(const Eigen::MatrixXd& p_ideal,
                                     const Eigen::VectorXd& pi_ideal,
                                     const Eigen::MatrixXd& q,
                                     const Eigen::VectorXd& mu) {
  const Index n = q.rows();
  if (p_ideal.rows() != n || p_ideal.cols() != n || q.cols() != n ||
      pi_ideal.size() != n || mu.size() != n) {
    throw std::invalid_argument("chains disagree in size");
  }
  auto reversible = [](const Eigen::MatrixXd& m, const Eigen::VectorXd& v) {
    const Eigen::MatrixXd flow = v.asDiagonal() * m;
    return (flow - flow.transpose()).cwiseAbs().maxCoeff() <= 1e-10;
  };
  if (!reversible(p_ideal, pi_ideal) || !reversible(q, mu)) {
    throw std::invalid_argument("chain violates detailed balance");
  }

  DirichletReport r;
  r.alpha = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (q(i, j) > 0.0) {
        r.alpha = std::min(r.alpha, pi_ideal[i] * p_ideal(i, j) / (mu[i] * q(i, j)));
      } else if (p_ideal(i, j) > 0.0) {
        throw std::invalid_argument("ideal chain moves along a pair outside the graph");
      }
    }
  }
  r.beta = (pi_ideal.array() / mu.array()).maxCoeff();
  r.gap_ideal = 1.0 - second_eigenvalue_modulus(p_ideal, pi_ideal);
  r.gap_walk = 1.0 - second_eigenvalue_modulus(q, mu);
  r.ratio = r.gap_walk > 0.0 ? r.gap_ideal / r.gap_walk
                             : std::numeric_limits<double>::infinity();
  r.holds = r.gap_ideal >= (r.alpha / r.beta) * r.gap_walk - 1e-12;
  return r;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope needs at least two matching points");
  }
  const auto m = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ScalingResult scaling_study(const ScalingConfig& config) {
  if (config.grid.size() < 2) throw std::invalid_argument("grid needs at least two points");
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const bool ideal = config.algorithm == "ideal";
  const auto algorithm = parse_algorithm(config.algorithm);
  if (!ideal && !algorithm) {
    throw std::invalid_argument("unknown algorithm '" + config.algorithm + "'");
  }
  const bool vary_k = config.vary == ScalingParameter::k;
  for (double g : config.grid) {
    const double d = vary_k ? config.fixed : g;
    if (!(g > 0.0) || d > static_cast<double>(config.n)) {
      throw std::invalid_argument("infeasible grid point");
    }
  }

  const std::size_t cells = config.grid.size() * static_cast<std::size_t>(config.trials);
  std::vector<double> errors(cells, 0.0);
  std::vector<char> failed(cells, 0);
  std::vector<int> resampled(cells, 0);

  detail::parallel_for(cells, [&](std::size_t cell) {
    const std::size_t g = cell / static_cast<std::size_t>(config.trials);
    const int trial = static_cast<int>(cell % static_cast<std::size_t>(config.trials));
    const double d = vary_k ? config.fixed : config.grid[g];
    const auto k = static_cast<std::int64_t>(vary_k ? config.grid[g] : config.fixed);
    const SyntheticInstance inst = make_instance(
        config.n, config.b, d, k, sweep_seeds(config.seed, !vary_k, g, trial));
    resampled[cell] = inst.resampled;
    Eigen::VectorXd scores;
    try {
      if (ideal) {
        const TransitionMatrix p = ideal_transition(inst.truth, inst.graph.edge_list());
        const Eigen::VectorXd uniform =
            Eigen::VectorXd::Constant(config.n, 1.0 / static_cast<double>(config.n));
        scores = power_iterate(p, uniform, 1e-14, static_cast<int>(100 * config.n + 10000)).pi;
      } else {
        scores = estimate(*algorithm, inst.graph, config.params).scores;
      }
    } catch (const ComputationError&) {
      failed[cell] = 1;
      return;
    }
    errors[cell] = config.metric == ErrorMetric::dw
                       ? dw_error(inst.truth, rank_from_scores(scores))
                       : normalized_error(scores, inst.truth.values());
  });

  ScalingResult result;
  std::vector<double> xs, ys;
  for (std::size_t g = 0; g < config.grid.size(); ++g) {
    ScalingPoint pt;
    pt.parameter = config.grid[g];
    double sum = 0.0;
    for (int t = 0; t < config.trials; ++t) {
      const std::size_t cell = g * static_cast<std::size_t>(config.trials) + t;
      pt.resampled += resampled[cell];
      if (failed[cell]) {
        ++pt.failed;
        continue;
      }
      sum += errors[cell];
      ++pt.trials;
    }
    pt.mean_error = pt.trials > 0 ? sum / pt.trials : std::numeric_limits<double>::quiet_NaN();
    result.resampled += pt.resampled;
    result.failed += pt.failed;
    if (pt.trials > 0 && pt.mean_error > 0.0) {
      xs.push_back(pt.parameter);
      ys.push_back(pt.mean_error);
    }
    result.points.push_back(pt);
  }
  result.slope = xs.size() >= 2 ? log_log_slope(xs, ys)
                                : std::numeric_limits<double>::quiet_NaN();
  return result;
}

}  // namespace rankcentrality
