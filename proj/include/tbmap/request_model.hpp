#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tbmap/testbed_model.hpp"

namespace tbmap {

enum class ChannelMode { fixed, flexible };

/// Channel demand on one interface type: either specific channel indices or
/// a count of channels the allocator may pick freely.
struct ChannelDemand {
  int interface_type = 0;
  ChannelMode mode = ChannelMode::flexible;
  std::vector<int> fixed_channels;  // fixed mode: distinct indices in [0, max_channels)
  int flexible_count = 0;           // flexible mode: 1..max_channels

  bool operator==(const ChannelDemand&) const = default;
};

enum class NodeKind { physical, virtual_node };

/// A reservation request for one time-slot window.
struct Request {
  int id = 0;
  int n_nodes = 0;
  AdjacencyMatrix topology;
  std::vector<ChannelDemand> demands;  // one entry per demanded interface type
  NodeKind node_kind = NodeKind::physical;
  int duration_slots = 1;
  int priority_rank = 1;  // 1 = highest, 5 = lowest

  bool operator==(const Request&) const = default;
};

/// Knobs for the randomized request generator. Defaults follow the
/// evaluation setup: 3..5 nodes, edge probability 0.5, 1..3 interface
/// types, channel counts ~ N(0.25*max_ch, (max_ch/6)^2) clamped to
/// [1, max_ch/2], priorities U{1..5}, durations ~ N(2, 5^2) clamped to >= 1.
struct GeneratorParams {
  int min_nodes = 3;
  int max_nodes = 5;
  double topology_edge_prob = 0.5;
  int min_interface_types = 1;
  int max_interface_types = 3;
  double channel_mean_frac = 0.25;
  double channel_sd_frac = 1.0 / 6.0;
  double duration_mean = 2.0;
  double duration_sd = 5.0;
  int priority_min = 1;
  int priority_max = 5;
  bool virtual_nodes = false;
};

/// Draws `count` randomized requests; pure function of (count, testbed
/// inventory, seed, params). Generated demands are all flexible-mode.
/// Throws std::invalid_argument for count < 1 or a testbed without
/// interface types.
std::vector<Request> generate_requests(int count, const TestbedTopology& testbed,
                                       std::uint64_t seed,
                                       const GeneratorParams& params = {});

/// Returns one message per violated invariant; empty means the request is
/// well-formed and serviceable on this testbed's inventory.
std::vector<std::string> validate_request(const Request& request,
                                          const TestbedTopology& testbed);

/// JSON array of request objects; see README for the schema.
std::vector<Request> load_requests(const std::string& path);
void save_requests(const std::vector<Request>& requests, const std::string& path);

}  // namespace tbmap
