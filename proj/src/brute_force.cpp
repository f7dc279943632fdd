#include "tbmap/brute_force.hpp"

#include <algorithm>
#include <stdexcept>

#include "tbmap/errors.hpp"
#include "tbmap/fitness.hpp"

namespace tbmap {

namespace {

MapperSolution finalize(const Chromosome& best, const std::vector<Request>& requests,
                        const CandidateSets& candidates, const TestbedTopology& testbed,
                        const GAConfig& cfg) {
  MapperSolution solution;
  solution.fitness = evaluate_fitness(best, requests, candidates, testbed, cfg);
  solution.feasible =
      solution.fitness.resource_conflicts == 0 && solution.fitness.channel_conflicts == 0;

  std::vector<ActivePlacement> active;
  for (std::size_t i = 0; i < best.genes.size(); ++i)
    if (best.genes[i].serve)
      active.push_back({&requests[i], &candidates[i][best.genes[i].mapping_index]});
  const auto grants = assign_channels(active, testbed);
  for (std::size_t i = 0; i < active.size(); ++i) {
    ServedRequest s;
    s.request_id = active[i].request->id;
    s.mapping = *active[i].mapping;
    if (grants) s.channels = (*grants)[i];
    solution.served.push_back(std::move(s));
  }
  return solution;
}

}  // namespace

MapperSolution optimize_bf(const std::vector<Request>& requests, const CandidateSets& candidates,
                           const TestbedTopology& testbed, const GAConfig& cfg,
                           double search_space_cap, BruteForceStats* stats) {
  validate_ga_config(cfg);
  if (candidates.size() != requests.size())
    throw std::invalid_argument("one candidate set per request expected");

  const std::size_t n = requests.size();
  double space = 1.0;
  for (const auto& cands : candidates) space *= static_cast<double>(cands.size()) + 1.0;
  if (stats) {
    stats->search_space = space;
    stats->evaluated = 0;
  }
  if (space > search_space_cap) throw SearchSpaceExceeded(space, search_space_cap);

  if (n == 0) {
    MapperSolution s;
    s.feasible = true;
    return s;
  }

  FitnessEvaluator evaluator(requests, candidates, testbed, cfg);

  // Odometer over gene values 0..m_r per request; 0 is "off", v > 0 picks
  // mapping v-1. Rightmost digit advances fastest, so chromosomes appear in
  // lexicographic order and keeping the first strict improvement makes the
  // final tie-break (lexicographically smallest) implicit.
  std::vector<int> digits(n, 0);
  std::vector<int> domain(n);
  for (std::size_t i = 0; i < n; ++i) domain[i] = static_cast<int>(candidates[i].size());

  Chromosome current;
  current.genes.resize(n);
  auto sync_gene = [&](std::size_t i) {
    if (digits[i] == 0) {
      current.genes[i].serve = false;
      current.genes[i].mapping_index = domain[i] > 0 ? 0 : kNoMapping;
    } else {
      current.genes[i].serve = true;
      current.genes[i].mapping_index = digits[i] - 1;
    }
  };
  for (std::size_t i = 0; i < n; ++i) sync_gene(i);

  Chromosome best;
  FitnessBreakdown best_fit;
  int best_served = -1;
  long evaluated = 0;

  while (true) {
    const FitnessBreakdown fit = evaluator.evaluate(current);
    ++evaluated;
    int served = 0;
    for (const Gene& g : current.genes) served += g.serve ? 1 : 0;

    bool better = false;
    if (best_served < 0) {
      better = true;
    } else if (fit.total != best_fit.total) {
      better = fit.total < best_fit.total;
    } else {
      const long conf = fit.resource_conflicts + fit.channel_conflicts;
      const long best_conf = best_fit.resource_conflicts + best_fit.channel_conflicts;
      if (conf != best_conf)
        better = conf < best_conf;
      else
        better = served > best_served;
    }
    if (better) {
      best = current;
      best_fit = fit;
      best_served = served;
    }

    // advance the odometer
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (digits[pos] < domain[pos]) {
        ++digits[pos];
        sync_gene(pos);
        break;
      }
      digits[pos] = 0;
      sync_gene(pos);
      if (pos == 0) pos = n + 1;  // full wrap: done
    }
    if (pos == n + 1 || n == 0) break;
  }

  if (stats) stats->evaluated = evaluated;
  return finalize(best, requests, candidates, testbed, cfg);
}

MapperSolution brute_force_optimum(const std::vector<Request>& requests,
                                   const TestbedTopology& testbed,
                                   std::optional<int> mapping_limit, const GAConfig& cfg,
                                   double search_space_cap, BruteForceStats* stats) {
  CandidateSets candidates;
  candidates.reserve(requests.size());
  for (const Request& r : requests)
    candidates.push_back(enumerate_induced_mappings(r, testbed, mapping_limit));
  return optimize_bf(requests, candidates, testbed, cfg, search_space_cap, stats);
}

}  // namespace tbmap
