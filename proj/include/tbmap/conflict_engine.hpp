#pragma once

#include <optional>
#include <vector>

#include "tbmap/isomorphism.hpp"
#include "tbmap/request_model.hpp"
#include "tbmap/testbed_model.hpp"

namespace tbmap {

/// What one placed request occupies on one testbed node. Physical requests
/// take the whole node (all of its interface units); virtual requests take
/// exactly the demanded interface types.
struct ResourceClaim {
  int request_id = 0;
  int node = 0;
  bool whole_node = false;
  std::vector<int> interfaces;  // empty iff whole_node

  bool operator==(const ResourceClaim&) const = default;
};

struct ConflictReport {
  long resource_conflicts = 0;
  long channel_conflicts = 0;

  long total() const { return resource_conflicts + channel_conflicts; }
  bool operator==(const ConflictReport&) const = default;
};

/// A request together with the placement chosen for it.
struct ActivePlacement {
  const Request* request = nullptr;
  const PlacementMapping* mapping = nullptr;
};

/// One claim per assigned node.
std::vector<ResourceClaim> claims_of(const Request& request, const PlacementMapping& mapping);

/// Counts contention across the active set.
///
/// Resource units are (node, interface type) pairs; a whole-node claim
/// covers every unit the node has. Each unit contributes
/// max(0, claimants - 1).
///
/// Channels use one global pool per interface type: every distinct fixed
/// channel demanded on a type occupies an identified slot and every
/// flexible demand occupies anonymous slots. A fixed channel demanded by
/// k > 1 requests contributes k - 1, and a type whose combined demand
/// exceeds its budget contributes the excess.
ConflictReport count_conflicts(const std::vector<ActivePlacement>& active,
                               const TestbedTopology& testbed);

/// Concrete channels granted to one request on one interface type.
struct ChannelGrant {
  int interface_type = 0;
  std::vector<int> channels;

  bool operator==(const ChannelGrant&) const = default;
};

/// Produces a concrete, collision-free channel assignment for a
/// conflict-free active set: fixed channels are honoured as requested,
/// then flexible demands take the lowest unused indices in input order.
/// Returns nullopt when the set has any conflict. Result is aligned with
/// `active` (one grant list per placement).
std::optional<std::vector<std::vector<ChannelGrant>>> assign_channels(
    const std::vector<ActivePlacement>& active, const TestbedTopology& testbed);

}  // namespace tbmap
