#include "tbmap/fitness.hpp"

#include <algorithm>
#include <stdexcept>

namespace tbmap {

namespace {

void check_dominance(const std::vector<Request>& requests, const GAConfig& cfg) {
  if (requests.empty()) return;
  int max_ts = 0;
  for (const Request& r : requests) max_ts = std::max(max_ts, r.duration_slots);
  const double bound =
      static_cast<double>(requests.size()) * (cfg.w1 + cfg.w2 * max_ts);
  if (cfg.large_number <= bound)
    throw std::invalid_argument(
        "large_number must exceed the worst-case rejection cost (" +
        std::to_string(bound) + "); raise it in the GA config");
}

}  // namespace

FitnessEvaluator::FitnessEvaluator(const std::vector<Request>& requests,
                                   const CandidateSets& candidates,
                                   const TestbedTopology& testbed, const GAConfig& cfg)
    : requests_(requests), candidates_(candidates), testbed_(testbed), cfg_(cfg) {
  if (candidates.size() != requests.size())
    throw std::invalid_argument("one candidate set per request expected");
  check_dominance(requests, cfg);

  n_interfaces_ = testbed.interface_count();
  rejection_term_.reserve(requests.size());
  demand_types_.reserve(requests.size());
  for (const Request& r : requests_) {
    rejection_term_.push_back(cfg.w1 / r.priority_rank + cfg.w2 * r.duration_slots);
    std::vector<int> types;
    for (const ChannelDemand& d : r.demands) types.push_back(d.interface_type);
    demand_types_.push_back(std::move(types));
  }

  unit_claims_.assign(static_cast<std::size_t>(testbed.n_nodes) * n_interfaces_, 0);
  flex_sum_.assign(n_interfaces_, 0);
  distinct_fixed_.assign(n_interfaces_, 0);
  fixed_claims_.resize(n_interfaces_);
  for (int t = 0; t < n_interfaces_; ++t)
    fixed_claims_[t].assign(testbed.max_channels_of(t), 0);
  type_touched_flag_.assign(n_interfaces_, 0);

  if (cfg.precheck_channels) {
    // If even the union of all serveable requests stays within every channel
    // budget with no fixed collision, any served subset does too.
    Chromosome all;
    all.genes.resize(requests.size());
    for (std::size_t i = 0; i < requests.size(); ++i) {
      all.genes[i].serve = !candidates_[i].empty();
      all.genes[i].mapping_index = candidates_[i].empty() ? kNoMapping : 0;
    }
    skip_channels_ = count_channel_conflicts(all) == 0;
  }
}

long FitnessEvaluator::count_resource_conflicts(const Chromosome& chromosome) {
  for (std::size_t i = 0; i < requests_.size(); ++i) {
    const Gene& g = chromosome.genes[i];
    if (!g.serve) continue;
    const Request& r = requests_[i];
    const PlacementMapping& m = candidates_[i][g.mapping_index];
    for (int node : m.assignment) {
      const std::size_t base = static_cast<std::size_t>(node) * n_interfaces_;
      if (r.node_kind == NodeKind::physical) {
        for (int t = 0; t < n_interfaces_; ++t) {
          if (!testbed_.node_has_interface(node, t)) continue;
          if (unit_claims_[base + t]++ == 0) touched_units_.push_back(base + t);
        }
      } else {
        for (int t : demand_types_[i])
          if (unit_claims_[base + t]++ == 0) touched_units_.push_back(base + t);
      }
    }
  }
  long conflicts = 0;
  for (int u : touched_units_) {
    conflicts += unit_claims_[u] - 1;
    unit_claims_[u] = 0;
  }
  touched_units_.clear();
  return conflicts;
}

long FitnessEvaluator::count_channel_conflicts(const Chromosome& chromosome) {
  long conflicts = 0;
  for (std::size_t i = 0; i < requests_.size(); ++i) {
    if (!chromosome.genes[i].serve) continue;
    for (const ChannelDemand& d : requests_[i].demands) {
      const int t = d.interface_type;
      if (!type_touched_flag_[t]) {
        type_touched_flag_[t] = 1;
        touched_types_.push_back(t);
      }
      if (d.mode == ChannelMode::fixed) {
        for (int ch : d.fixed_channels) {
          if (fixed_claims_[t][ch]++ == 0) {
            ++distinct_fixed_[t];
            touched_fixed_.emplace_back(t, ch);
          } else {
            ++conflicts;  // one more claimant on an already-taken channel
          }
        }
      } else {
        flex_sum_[t] += d.flexible_count;
      }
    }
  }
  for (int t : touched_types_) {
    conflicts += std::max(0L, distinct_fixed_[t] + flex_sum_[t] - testbed_.max_channels_of(t));
    flex_sum_[t] = 0;
    distinct_fixed_[t] = 0;
    type_touched_flag_[t] = 0;
  }
  touched_types_.clear();
  for (const auto& [t, ch] : touched_fixed_) fixed_claims_[t][ch] = 0;
  touched_fixed_.clear();
  return conflicts;
}

FitnessBreakdown FitnessEvaluator::evaluate(const Chromosome& chromosome) {
  FitnessBreakdown out;
  out.resource_conflicts = count_resource_conflicts(chromosome);
  out.channel_conflicts = skip_channels_ ? 0 : count_channel_conflicts(chromosome);
  double rejection = 0.0;
  for (std::size_t i = 0; i < requests_.size(); ++i)
    if (!chromosome.genes[i].serve) rejection += rejection_term_[i];
  out.rejection_cost = rejection;
  out.total = cfg_.large_number *
                  static_cast<double>(out.resource_conflicts + out.channel_conflicts) +
              rejection;
  return out;
}

}  // namespace tbmap
