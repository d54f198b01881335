#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rankcentrality/btl_model.hpp"
#include "rankcentrality/comparison_graph.hpp"
#include "rankcentrality/estimators.hpp"
#include "rankcentrality/rank_centrality.hpp"

namespace rankcentrality {

/// Eigenvalues, descending, of a chain that is reversible with respect to pi,
/// computed from the symmetric matrix Pi^{1/2} P Pi^{-1/2}.
Eigen::VectorXd reversible_spectrum(const Eigen::MatrixXd& p, const Eigen::VectorXd& pi);

/// max{lambda_2, -lambda_n} of a reversible chain.
double second_eigenvalue_modulus(const Eigen::MatrixXd& p, const Eigen::VectorXd& pi);

/// max_{i,j} |pi_i P_ij - pi_j P_ji|.
double detailed_balance_residual(const TransitionMatrix& p, const Eigen::VectorXd& pi);

/// mu_i = d_i / sum_j d_j, stationary for the simple random walk.
Eigen::VectorXd simple_walk_stationary(const ComparisonGraph& graph);

/// Largest singular value of P - P_ideal.
double perturbation_norm(const TransitionMatrix& p, const TransitionMatrix& ideal);

struct PerturbationReport {
  double delta_norm = 0.0;
  double xi = 0.0;
  double b = 1.0;
  double kappa = 1.0;
  Index d_min = 0;
  Index d_max = 0;
  double lambda_max_ideal = 0.0;
  /// lambda_max(P_ideal) + |Delta|_2 sqrt(pi_max / pi_min).
  double rho = 0.0;
  /// 1 - lambda_max(P_ideal).
  double gap_lhs = 0.0;
  /// xi d_min / (b^2 d_max).
  double gap_rhs = 0.0;
  bool gap_bound_holds = false;
  bool rho_below_one = false;
  /// Set only when rho < 1: every logged error sits under its envelope.
  bool trajectory_bound_holds = false;
  /// |p_t - pi| / |pi| and the envelope
  /// rho^t |p_0 - pi| / |pi| r + |Delta|_2 r / (1 - rho), r = sqrt(pi_max/pi_min),
  /// for t = 0..steps.
  std::vector<double> trajectory_error;
  std::vector<double> trajectory_envelope;
};

/// Compares the spectral gap of the ideal chain with xi d_min / (b^2 d_max).
/// Throws DisconnectedGraphError on a disconnected graph.
PerturbationReport check_spectral_gap_bound(const ScoreVector& w,
                                            const ComparisonGraph& graph);

/// Full report for sampled data against its ideal chain: the gap fields above,
/// |Delta|_2, rho, and the power-iteration trajectory from p0 over `steps`
/// steps checked against the perturbation envelope.
PerturbationReport check_perturbation(const ScoreVector& w,
                                      const ComparisonGraph& sampled,
                                      const Eigen::VectorXd& p0, int steps);

struct DirichletReport {
  /// min over edges of pi_i P_ij / (mu_i Q_ij).
  double alpha = 0.0;
  /// max_i pi_i / mu_i.
  double beta = 0.0;
  double gap_ideal = 0.0;
  double gap_walk = 0.0;
  /// gap_ideal / gap_walk; infinite when gap_walk == 0.
  double ratio = 0.0;
  bool holds = false;
};

/// Dirichlet-form comparison of two reversible chains on one graph whose edges
/// are the off-diagonal support of q. Throws std::invalid_argument when either
/// chain violates detailed balance by more than 1e-10 or p_ideal uses a pair
/// outside that support.
DirichletReport dirichlet_comparison(const Eigen::MatrixXd& p_ideal,
                                     const Eigen::VectorXd& pi_ideal,
                                     const Eigen::MatrixXd& q,
                                     const Eigen::VectorXd& mu);

enum class ScalingParameter { k, d };
enum class ErrorMetric { normalized, dw };

struct ScalingConfig {
  Index n = 200;
  double b = 10.0;
  ScalingParameter vary = ScalingParameter::k;
  std::vector<double> grid;
  /// d when varying k, k when varying d.
  double fixed = 28.0;
  int trials = 20;
  /// An Algorithm name, or "ideal" for Rank Centrality fed the exact chain.
  std::string algorithm = "rc";
  ErrorMetric metric = ErrorMetric::normalized;
  std::uint64_t seed = 1;
  EstimatorParams params;
};

struct ScalingPoint {
  double parameter = 0.0;
  double mean_error = 0.0;
  int trials = 0;
  int failed = 0;
  int resampled = 0;
};

struct ScalingResult {
  std::vector<ScalingPoint> points;
  /// Least-squares slope of log(mean error) against log(parameter).
  double slope = 0.0;
  int resampled = 0;
  int failed = 0;
};

ScalingResult scaling_study(const ScalingConfig& config);

/// Least-squares slope of log y against log x.
double log_log_slope(std::span<const double> x, std::span<const double> y);

}  // namespace rankcentrality
