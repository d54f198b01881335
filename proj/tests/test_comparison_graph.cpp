#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "rankcentrality/comparison_graph.hpp"
#include "rankcentrality/synthetic.hpp"

using namespace rankcentrality;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

ComparisonGraph cycle(Index n) {
  EdgeList e;
  for (Index i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return ComparisonGraph(n, e);
}

}  // namespace

TEST_CASE("from_records aggregates duplicate pairs") {
  const std::vector<ComparisonRecord> recs{{0, 1, 0, 1}, {0, 1, 1, 1}};
  const auto g = ComparisonGraph::from_records(2, recs);
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges()[0].k() == 3);
  CHECK(g.edges()[0].fraction_won_by(1) == doctest::Approx(2.0 / 3.0));

  // Either orientation lands on the same edge.
  const std::vector<ComparisonRecord> flipped{{1, 0, 1, 0}, {0, 1, 1, 1}};
  const auto h = ComparisonGraph::from_records(2, flipped);
  CHECK(h.to_records() == g.to_records());

  CHECK(ComparisonGraph::from_records(3, {}).edges().empty());
  CHECK_THROWS(ComparisonGraph::from_records(2, std::vector<ComparisonRecord>{{1, 1, 1, 0}}));
  CHECK_THROWS(ComparisonGraph::from_records(2, std::vector<ComparisonRecord>{{0, 2, 1, 0}}));
  CHECK_THROWS(ComparisonGraph::from_records(2, std::vector<ComparisonRecord>{{0, 1, -1, 0}}));
}

TEST_CASE("fractions of an edge are complementary") {
  const std::vector<ComparisonRecord> recs{{0, 1, 3, 4}, {1, 2, 7, 0}, {0, 2, 2, 9}};
  const auto g = ComparisonGraph::from_records(3, recs);
  for (const auto& e : g.edges()) {
    CHECK(e.fraction_won_by(e.i) + e.fraction_won_by(e.j) == doctest::Approx(1.0));
  }
  CHECK(g.degree(0) == 2);
  CHECK(g.d_min() <= g.d_max());
}

TEST_CASE("records round-trip through the graph") {
  Rng rng(4);
  const ScoreVector w = generate_scores(30, 5.0, rng);
  const auto edges = erdos_renyi(30, 8.0, rng);
  const auto recs = sample_comparisons(w, edges, 7, rng);
  const auto g = ComparisonGraph::from_records(30, recs);
  const auto back = g.to_records();
  CHECK(ComparisonGraph::from_records(30, back).to_records() == back);
  CHECK(back.size() == edges.size());
}

TEST_CASE("erdos renyi") {
  Rng rng(8);
  CHECK(erdos_renyi(10, 0.0, rng).empty());
  CHECK(erdos_renyi(10, 10.0, rng).size() == 45);
  const auto e = erdos_renyi(1000, 50.0, rng);
  const double mean = 1000.0 * 999.0 * 50.0 / 2000.0;
  const double sd = std::sqrt(1000.0 * 999.0 / 2.0 * 0.05 * 0.95);
  CHECK(std::abs(static_cast<double>(e.size()) - mean) < 4.0 * sd);
  CHECK_THROWS_AS(erdos_renyi(10, -1.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi(10, 11.0, rng), std::invalid_argument);
}

TEST_CASE("laplacian") {
  const MatrixXd two = MatrixXd(laplacian(ComparisonGraph(2, EdgeList{{0, 1}})));
  CHECK(two.isApprox(MatrixXd{{0, 1}, {1, 0}}));

  const MatrixXd tri = MatrixXd(laplacian(ComparisonGraph(3, complete_graph(3))));
  CHECK(tri.isApprox(MatrixXd{{0, 0.5, 0.5}, {0.5, 0, 0.5}, {0.5, 0.5, 0}}));

  const MatrixXd star =
      MatrixXd(laplacian(ComparisonGraph(4, EdgeList{{0, 1}, {0, 2}, {0, 3}})));
  CHECK(star.row(0).isApprox(Eigen::RowVector4d(0, 1.0 / 3, 1.0 / 3, 1.0 / 3)));
  CHECK(star.rowwise().sum().isApprox(VectorXd::Ones(4)));

  CHECK_THROWS(laplacian(ComparisonGraph(3, EdgeList{{0, 1}})));
}

TEST_CASE("spectral gap closed forms") {
  const auto k4 = spectral_gap(ComparisonGraph(4, complete_graph(4)));
  CHECK(k4.eigenvalues(0) == doctest::Approx(1.0));
  for (Index i = 1; i < 4; ++i) CHECK(k4.eigenvalues(i) == doctest::Approx(-1.0 / 3.0));
  CHECK(k4.xi == doctest::Approx(2.0 / 3.0));
  CHECK(k4.kappa == 1.0);

  const auto c4 = spectral_gap(cycle(4));
  CHECK(c4.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(c4.eigenvalues(1) == doctest::Approx(0.0).scale(1.0));
  CHECK(c4.eigenvalues(2) == doctest::Approx(0.0).scale(1.0));
  CHECK(c4.eigenvalues(3) == doctest::Approx(-1.0));
  CHECK(c4.xi == doctest::Approx(0.0).scale(1.0));

  const auto k2 = spectral_gap(ComparisonGraph(2, EdgeList{{0, 1}}));
  CHECK(k2.lambda_n == doctest::Approx(-1.0));
  CHECK(k2.xi == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("spectral gap on a disconnected graph reports components") {
  const auto s = spectral_gap(ComparisonGraph(4, EdgeList{{0, 1}, {2, 3}}));
  CHECK_FALSE(s.connected());
  CHECK(s.components.size() == 2);
  CHECK(s.xi == 0.0);
}

TEST_CASE("spectral summary matches the laplacian spectrum") {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto inst = make_instance(40, 1.0, 10.0, 0, {1, static_cast<std::uint64_t>(t), 1});
    const MatrixXd l = MatrixXd(laplacian(inst.graph));
    Eigen::EigenSolver<MatrixXd> es(l);
    VectorXd ev = es.eigenvalues().real();
    std::sort(ev.data(), ev.data() + ev.size(), std::greater<>());
    const auto s = spectral_gap(inst.graph);
    CHECK((ev - s.eigenvalues).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(s.lambda_max == std::max(s.lambda_2, -s.lambda_n));
    CHECK(s.lambda_n >= -1.0 - 1e-12);
    CHECK(s.lambda_2 <= 1.0 + 1e-12);
  }
}

TEST_CASE("random ER graphs have a healthy spectral gap") {
  int good = 0;
  for (int t = 0; t < 50; ++t) {
    const auto inst = make_instance(100, 1.0, 20.0, 0, {1, static_cast<std::uint64_t>(100 + t), 1});
    const auto s = spectral_gap(inst.graph);
    CHECK(s.xi > 0.0);
    if (s.xi >= 0.3) ++good;
  }
  CHECK(good >= 45);
}

TEST_CASE("connected components") {
  CHECK(connected_components(ComparisonGraph(5, complete_graph(5))).size() == 1);
  const auto singles = connected_components(ComparisonGraph(3, EdgeList{}));
  CHECK(singles.size() == 3);
  const auto pairs = connected_components(ComparisonGraph(4, EdgeList{{0, 1}, {2, 3}}));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].size() == 2);
  CHECK(pairs[1].size() == 2);
}
