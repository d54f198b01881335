#include "rankcentrality/experiments.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "parallel.hpp"
#include "rankcentrality/metrics.hpp"
#include "rankcentrality/synthetic.hpp"

namespace rankcentrality {
namespace {

struct Moments {
  double mean = 0.0;
  double sd = 0.0;
  int count = 0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  m.count = static_cast<int>(xs.size());
  if (xs.empty()) {
    m.mean = std::numeric_limits<double>::quiet_NaN();
    return m;
  }
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

double slope_or_nan(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isfinite(y[i]) && y[i] > 0.0) {
      xs.push_back(x[i]);
      ys.push_back(y[i]);
    }
  }
  return xs.size() >= 2 ? log_log_slope(xs, ys) : std::numeric_limits<double>::quiet_NaN();
}

struct TrialOutcome {
  bool failed = false;
  double dw = 0.0;
  double error = 0.0;
};

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.grid.empty()) throw std::invalid_argument("grid is empty");
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.n < 2) throw std::invalid_argument("n must be >= 2");
  if (!(config.b >= 1.0)) throw std::invalid_argument("b must be >= 1");
  if (config.algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  const bool vary_k = config.vary == ScalingParameter::k;
  for (double g : config.grid) {
    if (!(g > 0.0)) throw std::invalid_argument("grid values must be positive");
  }
  const double n = static_cast<double>(config.n);
  if (vary_k) {
    if (!(config.fixed > 0.0) || config.fixed > n) {
      throw std::invalid_argument("average degree d must lie in (0, n]");
    }
  } else {
    for (double d : config.grid) {
      if (d > n) throw std::invalid_argument("average degree d must lie in (0, n]");
    }
    if (!(config.fixed >= 1.0)) throw std::invalid_argument("k must be >= 1");
  }
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config) {
  validate(config);
  const bool vary_k = config.vary == ScalingParameter::k;
  const std::size_t n_grid = config.grid.size();
  const std::size_t n_alg = config.algorithms.size();
  const auto trials = static_cast<std::size_t>(config.trials);

  // outcomes[(g * trials + t) * n_alg + a]
  std::vector<TrialOutcome> outcomes(n_grid * trials * n_alg);
  std::vector<int> resampled(n_grid * trials, 0);

  detail::parallel_for(n_grid * trials, [&](std::size_t cell) {
    const std::size_t g = cell / trials;
    const int t = static_cast<int>(cell % trials);
    const double d = vary_k ? config.fixed : config.grid[g];
    const auto k = static_cast<std::int64_t>(vary_k ? config.grid[g] : config.fixed);
    const SyntheticInstance inst =
        make_instance(config.n, config.b, d, k, sweep_seeds(config.seed, !vary_k, g, t));
    resampled[cell] = inst.resampled;
    for (std::size_t a = 0; a < n_alg; ++a) {
      TrialOutcome& out = outcomes[cell * n_alg + a];
      try {
        const Estimate est = estimate(config.algorithms[a], inst.graph, config.params);
        out.dw = dw_error(inst.truth, rank_from_scores(est.scores));
        out.error = normalized_error(est.scores, inst.truth.values());
      } catch (const ComputationError&) {
        out.failed = true;
      }
    }
  });

  std::vector<SweepRow> rows;
  for (std::size_t a = 0; a < n_alg; ++a) {
    const std::size_t first = rows.size();
    std::vector<double> means_dw, means_err;
    for (std::size_t g = 0; g < n_grid; ++g) {
      SweepRow row;
      row.algorithm = std::string(algorithm_name(config.algorithms[a]));
      row.parameter = config.grid[g];
      std::vector<double> dws, errs;
      for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t cell = g * trials + t;
        row.resampled += resampled[cell];
        const TrialOutcome& out = outcomes[cell * n_alg + a];
        if (out.failed) {
          ++row.failed;
          continue;
        }
        dws.push_back(out.dw);
        errs.push_back(out.error);
      }
      const Moments mdw = moments(dws);
      const Moments merr = moments(errs);
      row.trials = mdw.count;
      row.mean_dw = mdw.mean;
      row.sd_dw = mdw.sd;
      row.mean_error = merr.mean;
      row.sd_error = merr.sd;
      means_dw.push_back(mdw.mean);
      means_err.push_back(merr.mean);
      rows.push_back(row);
    }
    const double slope_dw = slope_or_nan(config.grid, means_dw);
    const double slope_err = slope_or_nan(config.grid, means_err);
    for (std::size_t r = first; r < rows.size(); ++r) {
      rows[r].slope_dw = slope_dw;
      rows[r].slope_error = slope_err;
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << "algorithm,parameter,trials,failed,resampled,mean_dw,sd_dw,mean_error,"
        "sd_error,slope_dw,slope_error\n";
  os << std::setprecision(10);
  for (const auto& r : rows) {
    os << r.algorithm << ',' << r.parameter << ',' << r.trials << ',' << r.failed << ','
       << r.resampled << ',' << r.mean_dw << ',' << r.sd_dw << ',' << r.mean_error << ','
       << r.sd_error << ',' << r.slope_dw << ',' << r.slope_error << '\n';
  }
}

std::vector<CrbRow> run_crb_compare(const CrbConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.n < 2) throw std::invalid_argument("n must be >= 2");
  std::vector<double> grid = config.grid;
  std::string name = "none";
  switch (config.vary) {
    case CrbParameter::none: grid = {static_cast<double>(config.k)}; name = "k"; break;
    case CrbParameter::k: name = "k"; break;
    case CrbParameter::d: name = "d"; break;
    case CrbParameter::b: name = "b"; break;
  }
  if (grid.empty()) throw std::invalid_argument("grid is empty");
  const double n = static_cast<double>(config.n);
  for (double g : grid) {
    const double d = config.vary == CrbParameter::d ? g : config.d;
    if (!(d > 0.0) || d > n) throw std::invalid_argument("average degree d must lie in (0, n]");
    if (!(g > 0.0)) throw std::invalid_argument("grid values must be positive");
  }

  const auto trials = static_cast<std::size_t>(config.trials);
  struct Cell {
    bool failed = false;
    double rc = 0.0, mle = 0.0, crb = 0.0;
  };
  std::vector<Cell> cells(grid.size() * trials);
  const bool vary_graph = config.vary == CrbParameter::d;

  detail::parallel_for(cells.size(), [&](std::size_t c) {
    const std::size_t g = c / trials;
    const int t = static_cast<int>(c % trials);
    const double d = config.vary == CrbParameter::d ? grid[g] : config.d;
    const double b = config.vary == CrbParameter::b ? grid[g] : config.b;
    const std::int64_t k = config.vary == CrbParameter::k
                               ? static_cast<std::int64_t>(grid[g])
                               : config.k;
    const SyntheticInstance inst =
        make_instance(config.n, b, d, k, sweep_seeds(config.seed, vary_graph, g, t));
    const Eigen::VectorXd& truth = inst.truth.values();
    Cell& cell = cells[c];
    const FisherMatrix f = fisher_information(inst.truth, inst.graph.edge_list(), k);
    cell.crb = std::sqrt(cramer_rao_bound(f).trace) / truth.norm();
    try {
      cell.rc = normalized_error(estimate(Algorithm::rc, inst.graph).scores, truth);
      cell.mle = normalized_error(estimate(Algorithm::mle, inst.graph).scores, truth);
    } catch (const ComputationError&) {
      cell.failed = true;
    }
  });

  std::vector<CrbRow> rows;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    CrbRow row;
    row.parameter_name = name;
    row.parameter = grid[g];
    std::vector<double> rc, mle, crb;
    for (std::size_t t = 0; t < trials; ++t) {
      const Cell& cell = cells[g * trials + t];
      crb.push_back(cell.crb);  // defined whether or not the estimators fail
      if (cell.failed) {
        ++row.failed;
        continue;
      }
      rc.push_back(cell.rc);
      mle.push_back(cell.mle);
    }
    row.trials = static_cast<int>(rc.size());
    row.rc_error = moments(rc).mean;
    row.mle_error = moments(mle).mean;
    row.crb = moments(crb).mean;
    rows.push_back(row);
  }
  return rows;
}

void write_crb_csv(std::ostream& os, std::span<const CrbRow> rows) {
  os << "parameter_name,parameter,trials,failed,rc_error,mle_error,crb\n";
  os << std::setprecision(10);
  for (const auto& r : rows) {
    os << r.parameter_name << ',' << r.parameter << ',' << r.trials << ',' << r.failed
       << ',' << r.rc_error << ',' << r.mle_error << ',' << r.crb << '\n';
  }
}

std::vector<RobustnessRow> run_robustness(const Dataset& data,
                                          const RobustnessConfig& config) {
  if (config.rates.empty()) throw std::invalid_argument("rate grid is empty");
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (double r : config.rates) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("rates must lie in (0, 1]");
  }
  const Index n = data.size();
  const ComparisonGraph full = ComparisonGraph::from_records(n, data.records);
  const std::size_t n_alg = config.algorithms.size();

  std::vector<Ordering> truth(n_alg);
  for (std::size_t a = 0; a < n_alg; ++a) {
    truth[a] = rank_from_scores(estimate(config.algorithms[a], full, config.params).scores);
  }

  const auto trials = static_cast<std::size_t>(config.trials);
  const std::size_t cells = config.rates.size() * trials;
  std::vector<double> l1(cells * n_alg, 0.0);
  std::vector<char> failed(cells * n_alg, 0);
  std::vector<int> resampled(cells, 0);

  detail::parallel_for(cells, [&](std::size_t c) {
    const std::size_t r = c / trials;
    const auto t = static_cast<std::uint64_t>(c % trials);
    std::vector<ComparisonRecord> kept;
    for (int attempt = 0;; ++attempt) {
      if (attempt > config.max_retries) {
        for (std::size_t a = 0; a < n_alg; ++a) failed[c * n_alg + a] = 1;
        return;
      }
      Rng rng(derive_seed(config.seed, {label_hash("subsample"), r, t,
                                        static_cast<std::uint64_t>(attempt)}));
      std::bernoulli_distribution keep(config.rates[r]);
      kept.clear();
      for (const auto& rec : data.records) {
        if (keep(rng)) kept.push_back(rec);
      }
      const ComparisonGraph g = ComparisonGraph::from_records(n, kept);
      if (g.d_min() > 0 && connected_components(g).size() == 1) break;
      ++resampled[c];
    }
    const ComparisonGraph sample = ComparisonGraph::from_records(n, kept);
    for (std::size_t a = 0; a < n_alg; ++a) {
      try {
        const Ordering sigma =
            rank_from_scores(estimate(config.algorithms[a], sample, config.params).scores);
        l1[c * n_alg + a] = l1_displacement(truth[a], sigma);
      } catch (const ComputationError&) {
        failed[c * n_alg + a] = 1;
      }
    }
  });

  std::vector<RobustnessRow> rows;
  for (std::size_t a = 0; a < n_alg; ++a) {
    for (std::size_t r = 0; r < config.rates.size(); ++r) {
      RobustnessRow row;
      row.algorithm = std::string(algorithm_name(config.algorithms[a]));
      row.rate = config.rates[r];
      double sum = 0.0;
      for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t c = r * trials + t;
        row.resampled += resampled[c];
        if (failed[c * n_alg + a]) {
          ++row.failed;
          continue;
        }
        sum += l1[c * n_alg + a];
        ++row.trials;
      }
      row.mean_l1 = row.trials > 0 ? sum / row.trials
                                   : std::numeric_limits<double>::quiet_NaN();
      rows.push_back(row);
    }
  }
  return rows;
}

void write_robustness_csv(std::ostream& os, std::span<const RobustnessRow> rows) {
  os << "algorithm,rate,trials,failed,resampled,mean_l1\n";
  os << std::setprecision(10);
  for (const auto& r : rows) {
    os << r.algorithm << ',' << r.rate << ',' << r.trials << ',' << r.failed << ','
       << r.resampled << ',' << r.mean_l1 << '\n';
  }
}

}  // namespace rankcentrality
