#include "rankcentrality/ranking.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rankcentrality/comparison_graph.hpp"

namespace rankcentrality {

RankingOutput run_rank(const Dataset& data, const RankRequest& request) {
  const ComparisonGraph graph = ComparisonGraph::from_records(data.size(), data.records);
  const Estimate est = estimate(request.algorithm, graph, request.params);

  RankingOutput out;
  out.items = data.items;
  out.scores = est.scores;
  out.rank = rank_from_scores(est.scores);
  out.algorithm = std::string(algorithm_name(request.algorithm));
  out.params = request.params;
  out.seed = request.seed;
  out.iterations = est.iterations;
  out.residual = est.residual;
  out.converged = est.converged;
  out.components = connected_components(graph).size();
  out.warnings = data.warnings;
  out.warnings.insert(out.warnings.end(), est.warnings.begin(), est.warnings.end());
  return out;
}

std::string to_json(const RankingOutput& out) {
  nlohmann::ordered_json j;
  j["items"] = out.items;
  j["scores"] = std::vector<double>(out.scores.data(), out.scores.data() + out.scores.size());
  j["rank"] = out.rank.position;
  j["algorithm"] = out.algorithm;
  j["params"] = {{"epsilon", out.params.epsilon},
                 {"lambda", out.params.lambda},
                 {"ergodic_alpha", out.params.ergodic_alpha},
                 {"seed", out.seed}};
  j["diagnostics"] = {{"iterations", out.iterations},
                      {"residual", out.residual},
                      {"converged", out.converged},
                      {"components", out.components},
                      {"warnings", out.warnings}};
  return j.dump(2) + "\n";
}

void write_csv(std::ostream& os, const RankingOutput& out) {
  os << "item,score,rank\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < out.items.size(); ++i) {
    os << out.items[i] << ',' << out.scores[static_cast<Index>(i)] << ','
       << out.rank.position[i] << '\n';
  }
}

void write_table(std::ostream& os, const RankingOutput& out) {
  std::vector<std::size_t> order(out.items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.rank.position[a] < out.rank.position[b];
  });
  std::size_t width = 4;
  for (const auto& id : out.items) width = std::max(width, id.size());

  os << "algorithm: " << out.algorithm << "  iterations: " << out.iterations
     << "  converged: " << (out.converged ? "yes" : "no") << '\n';
  os << std::left << std::setw(6) << "rank" << std::setw(static_cast<int>(width) + 2)
     << "item" << "score\n";
  for (std::size_t idx : order) {
    os << std::left << std::setw(6) << out.rank.position[idx]
       << std::setw(static_cast<int>(width) + 2) << out.items[idx] << std::fixed
       << std::setprecision(6) << out.scores[static_cast<Index>(idx)] << '\n';
    os.unsetf(std::ios::fixed);
  }
  for (const auto& w : out.warnings) os << "warning: " << w << '\n';
}

}  // namespace rankcentrality
