#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "rankcentrality/checks.hpp"
#include "rankcentrality/rank_centrality.hpp"
#include "rankcentrality/synthetic.hpp"
#include "rankcentrality/theory_checks.hpp"

using namespace rankcentrality;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

TransitionMatrix dense_chain(const MatrixXd& p, Index d_max = 1) {
  return TransitionMatrix(p.sparseView(), d_max);
}

ScoreVector uniform(Index n) { return normalize(VectorXd::Ones(n)); }

}  // namespace

TEST_CASE("perturbation norm") {
  const auto p = ideal_transition(normalize(VectorXd{{1.0, 3.0}}), EdgeList{{0, 1}});
  CHECK(perturbation_norm(p, p) == 0.0);

  const double delta = 0.1;
  const MatrixXd base{{0.5, 0.5}, {0.5, 0.5}};
  const MatrixXd shifted = base + MatrixXd{{-delta, delta}, {delta, -delta}};
  CHECK(perturbation_norm(dense_chain(shifted), dense_chain(base)) ==
        doctest::Approx(2 * delta));

  CHECK_THROWS_AS(perturbation_norm(p, dense_chain(MatrixXd::Identity(3, 3))),
                  std::invalid_argument);
}

TEST_CASE("perturbation norm follows the sampling scale") {
  const Index n = 100;
  const std::int64_t k = 100;
  int within = 0;
  for (int t = 0; t < 100; ++t) {
    const auto s = static_cast<std::uint64_t>(t);
    const auto inst = make_instance(n, 2.0, static_cast<double>(n), k, {s, s, s + 1000});
    const auto p = build_transition(inst.graph);
    const auto ideal = ideal_transition(inst.truth, inst.graph.edge_list());
    const double bound =
        5.0 * std::sqrt(std::log(static_cast<double>(n)) / (k * static_cast<double>(n - 1)));
    if (perturbation_norm(p, ideal) < bound) ++within;
  }
  CHECK(within >= 95);
}

TEST_CASE("spectral gap bound at uniform scores") {
  const auto k4 = check_spectral_gap_bound(uniform(4), ComparisonGraph(4, complete_graph(4)));
  CHECK(k4.gap_lhs == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(k4.gap_rhs == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(k4.gap_bound_holds);
  CHECK(k4.b == doctest::Approx(1.0));
}

TEST_CASE("spectral gap bound fails at uniform scores on larger complete graphs") {
  // With uniform scores the ideal chain is (I + Q)/2 on K_n, so its gap is
  // n/(2(n-1)) while the graph gap is (n-2)/(n-1); the bound breaks for n >= 5.
  for (Index n = 3; n <= 10; ++n) {
    const auto rep = check_spectral_gap_bound(uniform(n), ComparisonGraph(n, complete_graph(n)));
    const double nd = static_cast<double>(n);
    CHECK(rep.gap_lhs == doctest::Approx(nd / (2 * (nd - 1))));
    CHECK(rep.gap_rhs == doctest::Approx((nd - 2) / (nd - 1)));
    CHECK(rep.gap_bound_holds == (n <= 4));
    // Half the bound always holds.
    CHECK(rep.gap_lhs >= 0.5 * rep.gap_rhs);
  }
}

TEST_CASE("spectral gap bound on a disconnected graph") {
  CHECK_THROWS(check_spectral_gap_bound(uniform(4), ComparisonGraph(4, EdgeList{{0, 1}, {2, 3}})));
}

TEST_CASE("halved spectral gap bound holds on random instances") {
  const auto r = gap_suite(7, 30);
  CHECK(r.instances == 30);
  const auto last = r.notes.back();
  CHECK(last == "half the bound holds on 30/30");
}

TEST_CASE("dirichlet comparison") {
  const ComparisonGraph k4(4, complete_graph(4));
  const MatrixXd q = MatrixXd(laplacian(k4));
  const VectorXd mu = simple_walk_stationary(k4);
  CHECK(mu.isApprox(VectorXd::Constant(4, 0.25)));

  const auto same = dirichlet_comparison(q, mu, q, mu);
  CHECK(same.alpha == doctest::Approx(1.0));
  CHECK(same.beta == doctest::Approx(1.0));
  CHECK(same.ratio == doctest::Approx(1.0));
  CHECK(same.holds);

  const MatrixXd lazy = 0.5 * (MatrixXd::Identity(4, 4) + q);
  const auto half = dirichlet_comparison(lazy, mu, q, mu);
  CHECK(half.alpha == doctest::Approx(0.5));
  CHECK(half.ratio == doctest::Approx(1.0));
  CHECK(half.holds);

  CHECK_THROWS_AS(dirichlet_comparison(lazy, VectorXd{{0.1, 0.2, 0.3, 0.4}}, q, mu),
                  std::invalid_argument);
}

TEST_CASE("dirichlet comparison holds on random instances") {
  const auto r = dirichlet_suite(7, 20);
  CHECK(r.ok());
}

TEST_CASE("detailed balance suite") {
  const auto r = balance_suite(3, 40);
  CHECK(r.ok());
  CHECK(r.worst < 1e-14);
}

TEST_CASE("reversible spectrum matches the general spectrum") {
  const auto inst = make_instance(30, 5.0, 8.0, 0, {2, 2, 2});
  const auto p = ideal_transition(inst.truth, inst.graph.edge_list()).dense();
  const VectorXd ev = reversible_spectrum(p, inst.truth.values());
  Eigen::EigenSolver<MatrixXd> es(p);
  VectorXd general = es.eigenvalues().real();
  std::sort(general.data(), general.data() + general.size(), std::greater<>());
  CHECK((ev - general).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(ev(0) == doctest::Approx(1.0));
  CHECK(second_eigenvalue_modulus(p, inst.truth.values()) ==
        doctest::Approx(std::max(ev(1), -ev(ev.size() - 1))));
}

TEST_CASE("trajectory stays inside the perturbation envelope") {
  const auto r = perturbation_suite(11, 10);
  CHECK(r.instances == 10);
  CHECK(r.ok());
}

TEST_CASE("perturbation report fields") {
  const auto inst = make_instance(40, 3.0, 40.0, 500, {4, 4, 4});
  const auto rep = check_perturbation(inst.truth, inst.graph, VectorXd::Constant(40, 1.0 / 40), 50);
  CHECK(rep.delta_norm >= 0.0);
  CHECK(rep.rho == doctest::Approx(rep.lambda_max_ideal +
                                   rep.delta_norm * std::sqrt(inst.truth.dynamic_range())));
  CHECK(rep.trajectory_error.size() == rep.trajectory_envelope.size());
  CHECK(rep.rho_below_one);
  CHECK(rep.trajectory_bound_holds);
}

TEST_CASE("log-log slope") {
  const std::vector<double> x{1, 2, 4, 8}, y{1, 0.5, 0.25, 0.125};
  CHECK(log_log_slope(x, y) == doctest::Approx(-1.0));
}

TEST_CASE("scaling study on ideal input has no sampling error") {
  ScalingConfig cfg;
  cfg.n = 50;
  cfg.grid = {8, 16, 32, 64};
  cfg.fixed = 10;
  cfg.trials = 10;
  cfg.algorithm = "ideal";
  const auto r = scaling_study(cfg);
  for (const auto& p : r.points) CHECK(p.mean_error < 1e-8);
}

TEST_CASE("scaling study slope in k") {
  ScalingConfig cfg;
  cfg.n = 100;
  cfg.grid = {8, 16, 32, 64, 128};
  cfg.fixed = 20;
  cfg.trials = 10;
  const auto r = scaling_study(cfg);
  CHECK(r.points.size() == 5);
  CHECK(r.slope == doctest::Approx(-0.5).epsilon(0.3));
}
