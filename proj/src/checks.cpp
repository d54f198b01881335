#include "rankcentrality/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rankcentrality/synthetic.hpp"
#include "rankcentrality/theory_checks.hpp"

namespace rankcentrality {
namespace {

struct GapInstance {
  ScoreVector w;
  ComparisonGraph graph{0, {}};
};

GapInstance draw_gap_instance(std::uint64_t seed, int index, int n, double d,
                              double b_max) {
  Rng rng(derive_seed(seed, {label_hash("gap-instance"), static_cast<std::uint64_t>(index)}));
  std::uniform_real_distribution<double> range(1.0, b_max);
  const double b = range(rng);
  GapInstance inst;
  inst.w = generate_scores(n, b, rng);
  EdgeList edges;
  do {
    edges = erdos_renyi(n, d, rng);
  } while (!is_connected(n, edges));
  inst.graph = ComparisonGraph(n, edges);
  return inst;
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

}  // namespace

SuiteResult balance_suite(std::uint64_t seed, int instances, int max_n) {
  SuiteResult r;
  r.name = "balance";
  for (int i = 0; i < instances; ++i) {
    Rng rng(derive_seed(seed, {label_hash("balance"), static_cast<std::uint64_t>(i)}));
    std::uniform_int_distribution<int> size(2, max_n);
    std::uniform_real_distribution<double> range(1.0, 10.0);
    const int n = size(rng);
    const double b = range(rng);
    const ScoreVector w = generate_scores(n, b, rng);
    std::uniform_real_distribution<double> degree(1.0, static_cast<double>(n));
    EdgeList edges;
    do {
      edges = erdos_renyi(n, degree(rng), rng);
    } while (!is_connected(n, edges));
    const double residual =
        detailed_balance_residual(ideal_transition(w, edges), w.values());
    r.worst = std::max(r.worst, residual);
    ++r.instances;
    if (residual < 1e-14) ++r.passed;
  }
  r.notes.push_back("largest detailed-balance residual " + fmt(r.worst));
  return r;
}

SuiteResult gap_suite(std::uint64_t seed, int instances, int n, double d, double b_max) {
  SuiteResult r;
  r.name = "gap";
  r.worst = std::numeric_limits<double>::infinity();
  int halved = 0;
  for (int i = 0; i < instances; ++i) {
    const GapInstance inst = draw_gap_instance(seed, i, n, d, b_max);
    const PerturbationReport rep = check_spectral_gap_bound(inst.w, inst.graph);
    ++r.instances;
    if (rep.gap_bound_holds) {
      ++r.passed;
    } else {
      r.notes.push_back("instance " + std::to_string(i) + ": b=" + fmt(rep.b) +
                        " gap=" + fmt(rep.gap_lhs) + " < bound=" + fmt(rep.gap_rhs));
    }
    if (rep.gap_lhs >= 0.5 * rep.gap_rhs - 1e-12) ++halved;
    r.worst = std::min(r.worst, rep.gap_lhs / rep.gap_rhs);
  }
  r.notes.push_back("smallest gap / bound " + fmt(r.worst));
  r.notes.push_back("half the bound holds on " + std::to_string(halved) + "/" +
                    std::to_string(r.instances));
  return r;
}

SuiteResult dirichlet_suite(std::uint64_t seed, int instances, int n, double d,
                            double b_max) {
  SuiteResult r;
  r.name = "dirichlet";
  r.worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < instances; ++i) {
    const GapInstance inst = draw_gap_instance(seed, i, n, d, b_max);
    const Eigen::MatrixXd q = Eigen::MatrixXd(laplacian(inst.graph));
    const DirichletReport rep = dirichlet_comparison(
        ideal_transition(inst.w, inst.graph.edge_list()).dense(), inst.w.values(), q,
        simple_walk_stationary(inst.graph));
    ++r.instances;
    if (rep.holds) ++r.passed;
    r.worst = std::min(r.worst, rep.ratio / (rep.alpha / rep.beta));
  }
  r.notes.push_back("smallest gap ratio / (alpha / beta) " + fmt(r.worst));
  return r;
}

SuiteResult perturbation_suite(std::uint64_t seed, int instances, int n, double d,
                               double b, std::int64_t k, int steps) {
  SuiteResult r;
  r.name = "perturbation";
  r.worst = std::numeric_limits<double>::infinity();
  double max_rho = 0.0;
  for (int draw = 0; r.instances < instances && draw < 10 * instances; ++draw) {
    const auto s = static_cast<std::uint64_t>(draw);
    const SyntheticInstance inst = make_instance(
        n, b, d, k,
        {derive_seed(seed, {label_hash("scores"), s}),
         derive_seed(seed, {label_hash("graph"), s}),
         derive_seed(seed, {label_hash("outcomes"), s})});
    PerturbationReport rep;
    try {
      const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n, 1.0 / n);
      rep = check_perturbation(inst.truth, inst.graph, uniform, steps);
    } catch (const std::invalid_argument&) {
      ++r.skipped;  // an edge without outcomes
      continue;
    }
    if (!rep.rho_below_one) {
      ++r.skipped;
      continue;
    }
    ++r.instances;
    max_rho = std::max(max_rho, rep.rho);
    if (rep.trajectory_bound_holds) ++r.passed;
    for (std::size_t t = 0; t < rep.trajectory_error.size(); ++t) {
      r.worst = std::min(r.worst, rep.trajectory_envelope[t] - rep.trajectory_error[t]);
    }
  }
  r.notes.push_back("draws skipped (rho >= 1 or an edge without outcomes): " + std::to_string(r.skipped));
  r.notes.push_back("largest rho " + fmt(max_rho));
  r.notes.push_back("smallest envelope slack " + fmt(r.worst));
  return r;
}

}  // namespace rankcentrality
