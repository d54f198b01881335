// rankcentrality: rank items from pairwise comparisons and run the synthetic
// experiments. Exit codes: 0 success, 1 computation or data error, 2 usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankcentrality/checks.hpp"
#include "rankcentrality/dataset.hpp"
#include "rankcentrality/errors.hpp"
#include "rankcentrality/experiments.hpp"
#include "rankcentrality/ranking.hpp"

namespace rc = rankcentrality;

namespace {

constexpr int kComputationError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<rc::Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<rc::Algorithm> out;
  for (const auto& name : names) {
    const auto a = rc::parse_algorithm(name);
    if (!a) throw UsageError("unknown algorithm '" + name + "'");
    out.push_back(*a);
  }
  return out;
}

rc::ScalingParameter parse_vary(const std::string& s) {
  if (s == "k") return rc::ScalingParameter::k;
  if (s == "d") return rc::ScalingParameter::d;
  throw UsageError("--vary must be k or d");
}

// Writes to `path`, or to stdout when path is empty.
template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write(out);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank Centrality: rank aggregation from pairwise comparisons"};
  app.require_subcommand(1);

  // rank
  auto* rank = app.add_subcommand("rank", "Rank the items of a comparison CSV");
  std::string rank_input, rank_algo = "rc", rank_out;
  rc::EstimatorParams rank_params;
  std::uint64_t rank_seed = 0;
  rank->add_option("--input", rank_input, "CSV with header item_i,item_j,wins_i,wins_j")
      ->required();
  rank->add_option("--algo", rank_algo,
                   "rc|rc_reg|mle|mle_reg|borda|ratio|mc1|mc2|mc3|mc4");
  rank->add_option("--epsilon", rank_params.epsilon, "pseudo-count for rc_reg");
  rank->add_option("--lambda", rank_params.lambda, "ridge weight for mle_reg");
  rank->add_option("--seed", rank_seed, "recorded in the output");
  rank->add_option("--out", rank_out, "write JSON (.json) or CSV (otherwise)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Synthetic error sweep over k or d");
  rc::ExperimentConfig sweep_cfg;
  std::string sweep_vary = "k", sweep_out;
  std::vector<std::string> sweep_algos{"rc"};
  sweep->add_option("--n", sweep_cfg.n, "items");
  sweep->add_option("--b", sweep_cfg.b, "dynamic range of the true scores");
  sweep->add_option("--vary", sweep_vary, "k or d");
  sweep->add_option("--grid", sweep_cfg.grid, "comma-separated grid")
      ->delimiter(',')
      ->required();
  sweep->add_option("--fixed", sweep_cfg.fixed, "d when varying k, k when varying d");
  sweep->add_option("--trials", sweep_cfg.trials, "instances per grid point");
  sweep->add_option("--algos", sweep_algos, "comma-separated algorithms")->delimiter(',');
  sweep->add_option("--epsilon", sweep_cfg.params.epsilon, "pseudo-count for rc_reg");
  sweep->add_option("--lambda", sweep_cfg.params.lambda, "ridge weight for mle_reg");
  sweep->add_option("--seed", sweep_cfg.seed, "base seed");
  sweep->add_option("--out", sweep_out, "CSV output path");

  // crb
  auto* crb = app.add_subcommand("crb", "Rank Centrality and MLE against the Cramer-Rao bound");
  rc::CrbConfig crb_cfg;
  std::string crb_vary = "none", crb_out;
  crb->add_option("--n", crb_cfg.n, "items");
  crb->add_option("--d", crb_cfg.d, "average degree");
  crb->add_option("--k", crb_cfg.k, "comparisons per pair");
  crb->add_option("--b", crb_cfg.b, "dynamic range");
  crb->add_option("--trials", crb_cfg.trials, "instances per point");
  crb->add_option("--seed", crb_cfg.seed, "base seed");
  crb->add_option("--vary", crb_vary, "none|k|d|b");
  crb->add_option("--grid", crb_cfg.grid, "comma-separated grid for --vary")->delimiter(',');
  crb->add_option("--out", crb_out, "CSV output path");

  // check
  auto* check = app.add_subcommand("check", "Run a Monte-Carlo property suite");
  std::string suite;
  std::uint64_t check_seed = 1;
  check->add_option("--suite", suite, "balance|gap|dirichlet|perturbation")->required();
  check->add_option("--seed", check_seed, "base seed");

  // robustness
  auto* robust = app.add_subcommand("robustness", "Ranking stability under edge subsampling");
  rc::RobustnessConfig robust_cfg;
  std::string robust_input, robust_out;
  std::vector<std::string> robust_algos{"rc", "mle", "borda"};
  robust->add_option("--input", robust_input, "comparison CSV")->required();
  robust->add_option("--rates", robust_cfg.rates, "comma-separated sampling rates")
      ->delimiter(',')
      ->required();
  robust->add_option("--trials", robust_cfg.trials, "subsamples per rate");
  robust->add_option("--algos", robust_algos, "comma-separated algorithms")->delimiter(',');
  robust->add_option("--seed", robust_cfg.seed, "base seed");
  robust->add_option("--out", robust_out, "CSV output path");

  // normalize
  auto* norm = app.add_subcommand("normalize", "Aggregate a comparison CSV per pair");
  std::string norm_input, norm_out;
  norm->add_option("--input", norm_input, "comparison CSV")->required();
  norm->add_option("--out", norm_out, "output CSV (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*rank) {
      const auto algo = rc::parse_algorithm(rank_algo);
      if (!algo) throw UsageError("unknown algorithm '" + rank_algo + "'");
      const rc::Dataset data = rc::ingest_csv(rank_input);
      const rc::RankingOutput out = rc::run_rank(data, {*algo, rank_params, rank_seed});
      rc::write_table(std::cout, out);
      if (!rank_out.empty()) {
        emit(rank_out, [&](std::ostream& os) {
          if (ends_with(rank_out, ".json")) {
            os << rc::to_json(out);
          } else {
            rc::write_csv(os, out);
          }
        });
      }
    } else if (*sweep) {
      sweep_cfg.vary = parse_vary(sweep_vary);
      sweep_cfg.algorithms = parse_algorithms(sweep_algos);
      try {
        rc::validate(sweep_cfg);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto rows = rc::run_sweep(sweep_cfg);
      emit(sweep_out, [&](std::ostream& os) { rc::write_sweep_csv(os, rows); });
    } else if (*crb) {
      if (crb_vary == "none") crb_cfg.vary = rc::CrbParameter::none;
      else if (crb_vary == "k") crb_cfg.vary = rc::CrbParameter::k;
      else if (crb_vary == "d") crb_cfg.vary = rc::CrbParameter::d;
      else if (crb_vary == "b") crb_cfg.vary = rc::CrbParameter::b;
      else throw UsageError("--vary must be none, k, d or b");
      if (crb_cfg.vary != rc::CrbParameter::none && crb_cfg.grid.empty()) {
        throw UsageError("--vary needs --grid");
      }
      if (crb_cfg.d > static_cast<double>(crb_cfg.n)) throw UsageError("d must not exceed n");
      const auto rows = rc::run_crb_compare(crb_cfg);
      emit(crb_out, [&](std::ostream& os) { rc::write_crb_csv(os, rows); });
    } else if (*check) {
      rc::SuiteResult result;
      if (suite == "balance") result = rc::balance_suite(check_seed);
      else if (suite == "gap") result = rc::gap_suite(check_seed);
      else if (suite == "dirichlet") result = rc::dirichlet_suite(check_seed);
      else if (suite == "perturbation") result = rc::perturbation_suite(check_seed);
      else throw UsageError("unknown suite '" + suite + "'");
      std::cout << result.name << ": " << result.passed << "/" << result.instances
                << " instances pass\n";
      for (const auto& note : result.notes) std::cout << "  " << note << '\n';
      return result.ok() ? 0 : kComputationError;
    } else if (*robust) {
      robust_cfg.algorithms = parse_algorithms(robust_algos);
      const rc::Dataset data = rc::ingest_csv(robust_input);
      const auto rows = rc::run_robustness(data, robust_cfg);
      emit(robust_out, [&](std::ostream& os) { rc::write_robustness_csv(os, rows); });
    } else if (*norm) {
      const rc::Dataset data = rc::ingest_csv(norm_input);
      emit(norm_out, [&](std::ostream& os) { rc::write_comparisons(os, data); });
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const rc::DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: a positive --epsilon will not fix disconnection; add "
                 "comparisons between the components or rank them separately\n";
    return kComputationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputationError;
  }
  return 0;
}
