#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tbmap/conflict_engine.hpp"
#include "tbmap/isomorphism.hpp"
#include "tbmap/request_model.hpp"
#include "tbmap/testbed_model.hpp"

namespace tbmap {

/// Candidate placements per request, aligned with the request list.
using CandidateSets = std::vector<std::vector<PlacementMapping>>;

/// One gene per request: serve it or not, and which candidate placement to
/// use. mapping_index is kNoMapping exactly when the request has no
/// candidates; such genes are never served.
struct Gene {
  bool serve = false;
  int mapping_index = -1;

  bool operator==(const Gene&) const = default;
};

inline constexpr int kNoMapping = -1;

struct Chromosome {
  std::vector<Gene> genes;

  bool operator==(const Chromosome&) const = default;
};

struct GAConfig {
  int population_size = 60;
  double crossover_prob = 0.8;
  double mutation_prob = 0.2;
  int max_generations = 500;
  int stall_generations = 50;
  double stall_rel_tolerance = 1e-6;
  double w1 = 1.0;
  double w2 = 1.0;
  double large_number = 1e6;
  int elitism_count = 1;
  std::uint64_t seed = 0;
  /// Skip per-chromosome channel counting when even the full request set
  /// is channel-conflict-free (subsets then are too).
  bool precheck_channels = true;
};

/// Throws std::invalid_argument on out-of-range fields.
void validate_ga_config(const GAConfig& cfg);

struct FitnessBreakdown {
  double rejection_cost = 0.0;
  long resource_conflicts = 0;
  long channel_conflicts = 0;
  double total = 0.0;

  bool operator==(const FitnessBreakdown&) const = default;
};

struct ServedRequest {
  int request_id = 0;
  PlacementMapping mapping;
  std::vector<ChannelGrant> channels;
};

struct MapperSolution {
  std::vector<ServedRequest> served;
  FitnessBreakdown fitness;
  int generations_run = 0;
  bool feasible = false;
};

/// total = large_number * (resource + channel conflicts over the served
/// subset) + sum of (w1 / P_r + w2 * TS_r) over requests *not* served.
/// Conflicts are counted via count_conflicts; the rejection sum runs in
/// request-list order.
FitnessBreakdown evaluate_fitness(const Chromosome& chromosome,
                                  const std::vector<Request>& requests,
                                  const CandidateSets& candidates,
                                  const TestbedTopology& testbed, const GAConfig& cfg);

/// population_size chromosomes with uniform random serve bits and mapping
/// indices; zero-candidate genes are forced unserved. Deterministic per
/// cfg.seed.
std::vector<Chromosome> initialize_population(const std::vector<Request>& requests,
                                              const CandidateSets& candidates,
                                              const GAConfig& cfg);

/// One generation: elites carried unchanged, tournament-of-2 parents,
/// single-point crossover with probability crossover_prob, then per
/// offspring with probability mutation_prob either a serve-bit toggle or a
/// mapping re-draw on one uniformly chosen gene (coin flip between the
/// two). All randomness comes from `rng`.
std::vector<Chromosome> ga_step(const std::vector<Chromosome>& population,
                                const std::vector<FitnessBreakdown>& fitness,
                                const CandidateSets& candidates, const GAConfig& cfg,
                                std::mt19937_64& rng);

/// GA loop over precomputed candidates: runs until max_generations or until
/// the best fitness stalls, then returns the best chromosome ever seen,
/// repaired to zero conflicts if necessary, with concrete channels.
MapperSolution optimize_ga(const std::vector<Request>& requests,
                           const CandidateSets& candidates,
                           const TestbedTopology& testbed, const GAConfig& cfg);

/// Full two-stage mapper: candidate enumeration (optionally capped at
/// mapping_limit per request) followed by the GA.
MapperSolution run_mapper(const std::vector<Request>& requests,
                          const TestbedTopology& testbed,
                          std::optional<int> mapping_limit, const GAConfig& cfg);

/// Serialized solution: served requests with node assignments and channel
/// numbers, the fitness breakdown, generations and feasibility.
std::string solution_to_json(const MapperSolution& solution, int indent = -1);

namespace detail {

/// optimize_ga plus the best-fitness trace per generation (index 0 is the
/// initial population's best).
struct GATrace {
  MapperSolution solution;
  std::vector<double> best_history;
};

GATrace optimize_ga_traced(const std::vector<Request>& requests,
                           const CandidateSets& candidates,
                           const TestbedTopology& testbed, const GAConfig& cfg);

}  // namespace detail

}  // namespace tbmap
