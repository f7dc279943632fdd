#include "tbmap/conflict_engine.hpp"

#include <algorithm>
#include <map>

namespace tbmap {

std::vector<ResourceClaim> claims_of(const Request& request, const PlacementMapping& mapping) {
  std::vector<ResourceClaim> claims;
  claims.reserve(mapping.assignment.size());
  for (int node : mapping.assignment) {
    ResourceClaim c;
    c.request_id = request.id;
    c.node = node;
    if (request.node_kind == NodeKind::physical) {
      c.whole_node = true;
    } else {
      for (const ChannelDemand& d : request.demands) c.interfaces.push_back(d.interface_type);
    }
    claims.push_back(std::move(c));
  }
  return claims;
}

ConflictReport count_conflicts(const std::vector<ActivePlacement>& active,
                               const TestbedTopology& testbed) {
  ConflictReport report;
  const int n_types = testbed.interface_count();

  // resource units: (node, interface type) -> claimant count
  std::map<std::pair<int, int>, long> unit_claims;
  for (const ActivePlacement& ap : active) {
    for (const ResourceClaim& c : claims_of(*ap.request, *ap.mapping)) {
      if (c.whole_node) {
        for (int t = 0; t < n_types; ++t)
          if (testbed.node_has_interface(c.node, t)) ++unit_claims[{c.node, t}];
      } else {
        for (int t : c.interfaces) ++unit_claims[{c.node, t}];
      }
    }
  }
  for (const auto& [unit, claimants] : unit_claims)
    report.resource_conflicts += std::max(0L, claimants - 1);

  // channels: per type, fixed-channel collisions plus budget excess
  std::map<int, std::map<int, long>> fixed_mult;  // type -> channel -> multiplicity
  std::map<int, long> flex_sum;                   // type -> flexible channel demand
  for (const ActivePlacement& ap : active) {
    for (const ChannelDemand& d : ap.request->demands) {
      if (d.mode == ChannelMode::fixed) {
        for (int ch : d.fixed_channels) ++fixed_mult[d.interface_type][ch];
      } else {
        flex_sum[d.interface_type] += d.flexible_count;
      }
    }
  }
  for (int t = 0; t < n_types; ++t) {
    long distinct_fixed = 0;
    if (auto it = fixed_mult.find(t); it != fixed_mult.end()) {
      for (const auto& [ch, mult] : it->second) {
        report.channel_conflicts += std::max(0L, mult - 1);
        ++distinct_fixed;
      }
    }
    long flex = 0;
    if (auto it = flex_sum.find(t); it != flex_sum.end()) flex = it->second;
    const long demand = distinct_fixed + flex;
    report.channel_conflicts += std::max(0L, demand - testbed.max_channels_of(t));
  }
  return report;
}

std::optional<std::vector<std::vector<ChannelGrant>>> assign_channels(
    const std::vector<ActivePlacement>& active, const TestbedTopology& testbed) {
  if (count_conflicts(active, testbed).total() != 0) return std::nullopt;

  const int n_types = testbed.interface_count();
  std::vector<std::vector<std::uint8_t>> used(n_types);
  for (int t = 0; t < n_types; ++t) used[t].assign(testbed.max_channels_of(t), 0);

  // fixed channels first: they name their slots
  for (const ActivePlacement& ap : active)
    for (const ChannelDemand& d : ap.request->demands)
      if (d.mode == ChannelMode::fixed)
        for (int ch : d.fixed_channels) used[d.interface_type][ch] = 1;

  std::vector<std::vector<ChannelGrant>> grants(active.size());
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (const ChannelDemand& d : active[i].request->demands) {
      ChannelGrant g;
      g.interface_type = d.interface_type;
      if (d.mode == ChannelMode::fixed) {
        g.channels = d.fixed_channels;
        std::sort(g.channels.begin(), g.channels.end());
      } else {
        auto& pool = used[d.interface_type];
        for (int ch = 0; ch < static_cast<int>(pool.size()) &&
                         static_cast<int>(g.channels.size()) < d.flexible_count;
             ++ch) {
          if (!pool[ch]) {
            pool[ch] = 1;
            g.channels.push_back(ch);
          }
        }
        // conflict-free input guarantees the pool suffices
        if (static_cast<int>(g.channels.size()) != d.flexible_count) return std::nullopt;
      }
      grants[i].push_back(std::move(g));
    }
  }
  return grants;
}

}  // namespace tbmap
