#include "tbmap/ga_mapper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "tbmap/fitness.hpp"

namespace tbmap {

void validate_ga_config(const GAConfig& cfg) {
  if (cfg.population_size < 1) throw std::invalid_argument("population_size must be positive");
  if (cfg.crossover_prob < 0.0 || cfg.crossover_prob > 1.0)
    throw std::invalid_argument("crossover_prob must lie in [0,1]");
  if (cfg.mutation_prob < 0.0 || cfg.mutation_prob > 1.0)
    throw std::invalid_argument("mutation_prob must lie in [0,1]");
  if (cfg.max_generations < 1) throw std::invalid_argument("max_generations must be positive");
  if (cfg.stall_generations < 1) throw std::invalid_argument("stall_generations must be positive");
  if (cfg.stall_rel_tolerance < 0.0)
    throw std::invalid_argument("stall_rel_tolerance must be non-negative");
  if (cfg.w1 < 0.0 || cfg.w2 < 0.0) throw std::invalid_argument("w1 and w2 must be non-negative");
  if (cfg.large_number <= 0.0) throw std::invalid_argument("large_number must be positive");
  if (cfg.elitism_count < 0 || cfg.elitism_count > cfg.population_size)
    throw std::invalid_argument("elitism_count must lie in [0, population_size]");
}

namespace {

void validate_chromosome(const Chromosome& c, const std::vector<Request>& requests,
                         const CandidateSets& candidates) {
  if (c.genes.size() != requests.size())
    throw std::invalid_argument("chromosome length differs from request count");
  for (std::size_t i = 0; i < c.genes.size(); ++i) {
    const Gene& g = c.genes[i];
    const int n_cand = static_cast<int>(candidates[i].size());
    if (n_cand == 0) {
      if (g.serve) throw std::invalid_argument("gene " + std::to_string(i) +
                                               " served without any candidate mapping");
    } else if (g.serve && (g.mapping_index < 0 || g.mapping_index >= n_cand)) {
      throw std::invalid_argument("gene " + std::to_string(i) + " has mapping index " +
                                  std::to_string(g.mapping_index) + " outside [0," +
                                  std::to_string(n_cand) + ")");
    }
  }
}

std::vector<ActivePlacement> served_placements(const Chromosome& c,
                                               const std::vector<Request>& requests,
                                               const CandidateSets& candidates) {
  std::vector<ActivePlacement> active;
  for (std::size_t i = 0; i < c.genes.size(); ++i)
    if (c.genes[i].serve)
      active.push_back({&requests[i], &candidates[i][c.genes[i].mapping_index]});
  return active;
}

std::vector<Chromosome> initialize_population_rng(const std::vector<Request>& requests,
                                                  const CandidateSets& candidates,
                                                  const GAConfig& cfg, std::mt19937_64& rng) {
  std::vector<Chromosome> population(cfg.population_size);
  for (Chromosome& c : population) {
    c.genes.resize(requests.size());
    for (std::size_t i = 0; i < requests.size(); ++i) {
      const int n_cand = static_cast<int>(candidates[i].size());
      if (n_cand == 0) {
        c.genes[i] = {false, kNoMapping};
        continue;
      }
      c.genes[i].serve = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      c.genes[i].mapping_index = std::uniform_int_distribution<int>(0, n_cand - 1)(rng);
    }
  }
  return population;
}

/// Tournament of two: uniform picks, lower total wins, first pick on ties.
std::size_t tournament(const std::vector<FitnessBreakdown>& fitness, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, fitness.size() - 1);
  const std::size_t a = pick(rng);
  const std::size_t b = pick(rng);
  return fitness[a].total <= fitness[b].total ? a : b;
}

void mutate(Chromosome& c, const CandidateSets& candidates, const GAConfig& cfg,
            std::mt19937_64& rng) {
  if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) >= cfg.mutation_prob) return;
  const std::size_t i =
      std::uniform_int_distribution<std::size_t>(0, c.genes.size() - 1)(rng);
  const int n_cand = static_cast<int>(candidates[i].size());
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    // serve-bit toggle; genes without candidates stay unserved
    if (n_cand > 0) c.genes[i].serve = !c.genes[i].serve;
  } else {
    if (n_cand > 0)
      c.genes[i].mapping_index = std::uniform_int_distribution<int>(0, n_cand - 1)(rng);
  }
}

}  // namespace

FitnessBreakdown evaluate_fitness(const Chromosome& chromosome,
                                  const std::vector<Request>& requests,
                                  const CandidateSets& candidates,
                                  const TestbedTopology& testbed, const GAConfig& cfg) {
  validate_chromosome(chromosome, requests, candidates);
  FitnessBreakdown out;
  const ConflictReport conflicts =
      count_conflicts(served_placements(chromosome, requests, candidates), testbed);
  out.resource_conflicts = conflicts.resource_conflicts;
  out.channel_conflicts = conflicts.channel_conflicts;
  double rejection = 0.0;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (chromosome.genes[i].serve) continue;
    const double term = cfg.w1 / requests[i].priority_rank + cfg.w2 * requests[i].duration_slots;
    rejection += term;
  }
  out.rejection_cost = rejection;
  out.total = cfg.large_number *
                  static_cast<double>(out.resource_conflicts + out.channel_conflicts) +
              rejection;
  return out;
}

std::vector<Chromosome> initialize_population(const std::vector<Request>& requests,
                                              const CandidateSets& candidates,
                                              const GAConfig& cfg) {
  validate_ga_config(cfg);
  if (candidates.size() != requests.size())
    throw std::invalid_argument("one candidate set per request expected");
  std::mt19937_64 rng(cfg.seed);
  return initialize_population_rng(requests, candidates, cfg, rng);
}

std::vector<Chromosome> ga_step(const std::vector<Chromosome>& population,
                                const std::vector<FitnessBreakdown>& fitness,
                                const CandidateSets& candidates, const GAConfig& cfg,
                                std::mt19937_64& rng) {
  if (population.empty()) throw std::invalid_argument("empty population");
  if (fitness.size() != population.size())
    throw std::invalid_argument("one fitness entry per chromosome expected");
  const std::size_t pop_size = population.size();
  const std::size_t n_genes = population[0].genes.size();
  const std::size_t n_elite =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.elitism_count), pop_size);

  std::vector<std::size_t> order(pop_size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fitness[a].total < fitness[b].total;
  });

  std::vector<Chromosome> next;
  next.reserve(pop_size);
  for (std::size_t e = 0; e < n_elite; ++e) next.push_back(population[order[e]]);

  while (next.size() < pop_size) {
    const Chromosome& parent_a = population[tournament(fitness, rng)];
    const Chromosome& parent_b = population[tournament(fitness, rng)];
    Chromosome child_a = parent_a;
    Chromosome child_b = parent_b;
    if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < cfg.crossover_prob &&
        n_genes >= 2) {
      const std::size_t cut =
          std::uniform_int_distribution<std::size_t>(1, n_genes - 1)(rng);
      for (std::size_t i = cut; i < n_genes; ++i)
        std::swap(child_a.genes[i], child_b.genes[i]);
    }
    mutate(child_a, candidates, cfg, rng);
    mutate(child_b, candidates, cfg, rng);
    next.push_back(std::move(child_a));
    if (next.size() < pop_size) next.push_back(std::move(child_b));
  }
  return next;
}

namespace {

/// Greedy repair for a best chromosome that never reached zero penalties:
/// drop the served request whose removal sheds the most conflicts (ties:
/// cheaper rejection, then lower id) until none remain.
void repair_to_feasible(Chromosome& c, const std::vector<Request>& requests,
                        const CandidateSets& candidates, const TestbedTopology& testbed,
                        const GAConfig& cfg) {
  auto conflict_total = [&](const Chromosome& chrom) {
    return count_conflicts(served_placements(chrom, requests, candidates), testbed).total();
  };
  long current = conflict_total(c);
  while (current > 0) {
    long best_drop = -1;
    std::size_t best_i = 0;
    double best_rejection = 0.0;
    for (std::size_t i = 0; i < c.genes.size(); ++i) {
      if (!c.genes[i].serve) continue;
      Chromosome trial = c;
      trial.genes[i].serve = false;
      const long drop = current - conflict_total(trial);
      const double rejection =
          cfg.w1 / requests[i].priority_rank + cfg.w2 * requests[i].duration_slots;
      const bool better =
          drop > best_drop ||
          (drop == best_drop &&
           (rejection < best_rejection ||
            (rejection == best_rejection && best_drop >= 0 &&
             requests[i].id < requests[best_i].id)));
      if (best_drop < 0 || better) {
        best_drop = drop;
        best_i = i;
        best_rejection = rejection;
      }
    }
    c.genes[best_i].serve = false;
    current = conflict_total(c);
  }
}

MapperSolution finalize_solution(Chromosome best, int generations,
                                 const std::vector<Request>& requests,
                                 const CandidateSets& candidates,
                                 const TestbedTopology& testbed, const GAConfig& cfg) {
  const FitnessBreakdown before = evaluate_fitness(best, requests, candidates, testbed, cfg);
  if (before.resource_conflicts + before.channel_conflicts > 0)
    repair_to_feasible(best, requests, candidates, testbed, cfg);

  MapperSolution solution;
  solution.generations_run = generations;
  solution.fitness = evaluate_fitness(best, requests, candidates, testbed, cfg);
  solution.feasible =
      solution.fitness.resource_conflicts == 0 && solution.fitness.channel_conflicts == 0;

  const std::vector<ActivePlacement> active = served_placements(best, requests, candidates);
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

MapperSolution empty_solution() {
  MapperSolution s;
  s.feasible = true;
  return s;
}

}  // namespace

namespace detail {

GATrace optimize_ga_traced(const std::vector<Request>& requests,
                           const CandidateSets& candidates, const TestbedTopology& testbed,
                           const GAConfig& cfg) {
  validate_ga_config(cfg);
  if (candidates.size() != requests.size())
    throw std::invalid_argument("one candidate set per request expected");

  GATrace trace;
  if (requests.empty()) {
    trace.solution = empty_solution();
    return trace;
  }

  FitnessEvaluator evaluator(requests, candidates, testbed, cfg);
  std::mt19937_64 rng(cfg.seed);

  std::vector<Chromosome> population =
      initialize_population_rng(requests, candidates, cfg, rng);
  std::vector<FitnessBreakdown> fitness(population.size());
  for (std::size_t i = 0; i < population.size(); ++i)
    fitness[i] = evaluator.evaluate(population[i]);

  auto best_of = [&]() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < fitness.size(); ++i)
      if (fitness[i].total < fitness[best].total) best = i;
    return best;
  };

  std::size_t best_idx = best_of();
  Chromosome best_ever = population[best_idx];
  double best_total = fitness[best_idx].total;
  trace.best_history.push_back(best_total);

  int generations = 0;
  int stall = 0;
  while (generations < cfg.max_generations) {
    population = ga_step(population, fitness, candidates, cfg, rng);
    ++generations;
    for (std::size_t i = 0; i < population.size(); ++i)
      fitness[i] = evaluator.evaluate(population[i]);

    const double previous = best_total;
    best_idx = best_of();
    if (fitness[best_idx].total < best_total) {
      best_total = fitness[best_idx].total;
      best_ever = population[best_idx];
    }
    trace.best_history.push_back(best_total);

    const double improvement = previous - best_total;
    const double relative = previous > 0.0 ? improvement / previous : 0.0;
    if (relative < cfg.stall_rel_tolerance)
      ++stall;
    else
      stall = 0;
    if (stall >= cfg.stall_generations) break;
  }

  trace.solution =
      finalize_solution(std::move(best_ever), generations, requests, candidates, testbed, cfg);
  return trace;
}

}  // namespace detail

MapperSolution optimize_ga(const std::vector<Request>& requests, const CandidateSets& candidates,
                           const TestbedTopology& testbed, const GAConfig& cfg) {
  return detail::optimize_ga_traced(requests, candidates, testbed, cfg).solution;
}

MapperSolution run_mapper(const std::vector<Request>& requests, const TestbedTopology& testbed,
                          std::optional<int> mapping_limit, const GAConfig& cfg) {
  CandidateSets candidates;
  candidates.reserve(requests.size());
  for (const Request& r : requests)
    candidates.push_back(enumerate_induced_mappings(r, testbed, mapping_limit));
  return optimize_ga(requests, candidates, testbed, cfg);
}

std::string solution_to_json(const MapperSolution& solution, int indent) {
  nlohmann::ordered_json doc;
  doc["feasible"] = solution.feasible;
  doc["generations"] = solution.generations_run;
  doc["fitness"] = {{"total", solution.fitness.total},
                    {"rejection_cost", solution.fitness.rejection_cost},
                    {"resource_conflicts", solution.fitness.resource_conflicts},
                    {"channel_conflicts", solution.fitness.channel_conflicts}};
  doc["served"] = nlohmann::ordered_json::array();
  for (const ServedRequest& s : solution.served) {
    nlohmann::ordered_json item;
    item["request_id"] = s.request_id;
    item["nodes"] = s.mapping.assignment;
    item["channels"] = nlohmann::ordered_json::array();
    for (const ChannelGrant& g : s.channels)
      item["channels"].push_back(
          {{"interface_type", g.interface_type}, {"channels", g.channels}});
    doc["served"].push_back(std::move(item));
  }
  return doc.dump(indent);
}

}  // namespace tbmap
