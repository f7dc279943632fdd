#pragma once

#include <vector>

#include "tbmap/ga_mapper.hpp"

namespace tbmap {

/// Allocation-free fitness evaluation for search loops. Produces exactly
/// the same FitnessBreakdown as evaluate_fitness (identical doubles): the
/// rejection sum runs in the same request order and the conflict counts are
/// integers. Holds scratch buffers, so one instance per thread.
class FitnessEvaluator {
 public:
  FitnessEvaluator(const std::vector<Request>& requests, const CandidateSets& candidates,
                   const TestbedTopology& testbed, const GAConfig& cfg);

  FitnessBreakdown evaluate(const Chromosome& chromosome);

  /// True when the construction-time precheck proved every serveable
  /// subset channel-conflict-free.
  bool channels_prechecked_clean() const { return skip_channels_; }

 private:
  long count_resource_conflicts(const Chromosome& chromosome);
  long count_channel_conflicts(const Chromosome& chromosome);

  const std::vector<Request>& requests_;
  const CandidateSets& candidates_;
  const TestbedTopology& testbed_;
  GAConfig cfg_;

  int n_interfaces_ = 0;
  bool skip_channels_ = false;
  std::vector<double> rejection_term_;       // per request: w1/P_r + w2*TS_r
  std::vector<std::vector<int>> demand_types_;  // per request: demanded type ids

  // scratch, reset after every call
  std::vector<int> unit_claims_;             // node * I + type -> claimant count
  std::vector<int> touched_units_;
  std::vector<long> flex_sum_;               // per type
  std::vector<long> distinct_fixed_;         // per type
  std::vector<std::vector<int>> fixed_claims_;  // per type, per channel
  std::vector<std::pair<int, int>> touched_fixed_;
  std::vector<int> touched_types_;
  std::vector<std::uint8_t> type_touched_flag_;
};

}  // namespace tbmap
