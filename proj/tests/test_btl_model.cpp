#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rankcentrality/btl_model.hpp"

using namespace rankcentrality;
using Eigen::VectorXd;

TEST_CASE("preference probability") {
  CHECK(preference_probability(normalize(VectorXd::Constant(2, 1.0)), 0, 1) == 0.5);
  CHECK(preference_probability(normalize(VectorXd{{0.25, 0.75}}), 0, 1) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK(preference_probability(normalize(VectorXd{{0.25, 0.25, 0.5}}), 0, 2) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const ScoreVector w = normalize(VectorXd{{1.0, 2.0}});
  CHECK_THROWS_AS(preference_probability(w, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(preference_probability(w, 1, 1), std::invalid_argument);
}

TEST_CASE("preference probabilities of a pair are complementary") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const ScoreVector w = generate_scores(8, 10.0, rng);
    for (Index i = 0; i < 8; ++i) {
      for (Index j = 0; j < 8; ++j) {
        if (i == j) continue;
        CHECK(preference_probability(w, i, j) + preference_probability(w, j, i) ==
              doctest::Approx(1.0).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("normalize") {
  const ScoreVector a = normalize(VectorXd{{2.0, 2.0}});
  CHECK(a[0] == 0.5);
  CHECK(a[1] == 0.5);
  const ScoreVector b = normalize(VectorXd{{1.0, 3.0}});
  CHECK(b[0] == 0.25);
  CHECK(b[1] == 0.75);
  CHECK(normalize(VectorXd{{5.0}})[0] == 1.0);

  CHECK_THROWS_AS(normalize(VectorXd{}), std::invalid_argument);
  CHECK_THROWS_AS(normalize(VectorXd{{1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize(VectorXd{{1.0, -2.0}}), std::invalid_argument);
}

TEST_CASE("score distance") {
  const VectorXd w{{0.3, 1.2, 4.0}};
  CHECK(score_distance(w, 7.0 * w) < 1e-15);
  CHECK(score_distance(w, w) == 0.0);
  CHECK(score_distance(VectorXd{{1.0, 1.0}}, VectorXd{{1.0, 3.0}}) ==
        doctest::Approx(std::sqrt(0.125)).epsilon(1e-14));
  CHECK_THROWS_AS(score_distance(VectorXd{{1.0, 1.0}}, w), std::invalid_argument);
}

TEST_CASE("score distance obeys the triangle inequality") {
  Rng rng(3);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  auto draw = [&] {
    VectorXd v(6);
    for (auto& x : v) x = u(rng);
    return v;
  };
  for (int t = 0; t < 1000; ++t) {
    const VectorXd a = draw(), b = draw(), c = draw();
    CHECK(score_distance(a, c) <= score_distance(a, b) + score_distance(b, c) + 1e-15);
  }
}

TEST_CASE("generate scores") {
  Rng rng(5);
  const ScoreVector flat = generate_scores(5, 1.0, rng);
  for (Index i = 0; i < 5; ++i) CHECK(flat[i] == doctest::Approx(0.2).epsilon(1e-15));

  const ScoreVector w = generate_scores(400, 10.0, rng);
  CHECK(w.size() == 400);
  CHECK(w.values().sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.dynamic_range() >= 9.9);
  CHECK(w.dynamic_range() <= 10.0 + 1e-9);

  Rng r1(42), r2(42);
  CHECK(generate_scores(50, 3.0, r1).values() == generate_scores(50, 3.0, r2).values());

  CHECK_THROWS_AS(generate_scores(5, 0.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate_scores(1, 2.0, rng), std::invalid_argument);
}

TEST_CASE("generated scores always satisfy the invariants") {
  Rng rng(17);
  std::uniform_real_distribution<double> ub(1.0, 50.0);
  for (int t = 0; t < 200; ++t) {
    const double b = ub(rng);
    const ScoreVector w = generate_scores(2 + t % 30, b, rng);
    CHECK(w.min() > 0.0);
    CHECK(std::abs(w.values().sum() - 1.0) < 1e-12);
    CHECK(w.dynamic_range() <= b + 1e-9);
  }
}

TEST_CASE("sample comparisons") {
  const ScoreVector w = normalize(VectorXd{{0.5, 0.5}});
  const EdgeList edges{{0, 1}};
  Rng rng(9);

  const auto none = sample_comparisons(w, edges, 0, rng);
  REQUIRE(none.size() == 1);
  CHECK(none[0].wins_i == 0);
  CHECK(none[0].wins_j == 0);

  const auto many = sample_comparisons(w, edges, 10000, rng);
  CHECK(many[0].k() == 10000);
  CHECK(many[0].fraction() >= 0.485);
  CHECK(many[0].fraction() <= 0.515);

  Rng r1(77), r2(77);
  const ScoreVector v = normalize(VectorXd{{1.0, 2.0, 3.0}});
  const EdgeList tri{{0, 1}, {1, 2}, {0, 2}};
  CHECK(sample_comparisons(v, tri, 25, r1) == sample_comparisons(v, tri, 25, r2));

  CHECK_THROWS(sample_comparisons(v, EdgeList{{0, 3}}, 5, rng));
  CHECK_THROWS(sample_comparisons(v, EdgeList{{1, 1}}, 5, rng));
  CHECK_THROWS(sample_comparisons(v, tri, -1, rng));
}

TEST_CASE("empirical win fractions converge to the model") {
  Rng rng(21);
  const ScoreVector w = generate_scores(40, 10.0, rng);
  std::uniform_int_distribution<Index> pick(0, 39);
  for (int t = 0; t < 100; ++t) {
    Index i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    const EdgeList e{{i, j}};
    const auto rec = sample_comparisons(w, e, 100000, rng);
    CHECK(std::abs(rec[0].fraction() - preference_probability(w, i, j)) < 0.01);
  }
}
