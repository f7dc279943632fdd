#pragma once

#include <optional>
#include <vector>

#include "tbmap/request_model.hpp"
#include "tbmap/testbed_model.hpp"

namespace tbmap {

/// One placement of a request onto the testbed: assignment[p] is the
/// testbed node hosting request node p. Entries are distinct, every
/// assigned node carries every demanded interface type, and the request
/// topology is reproduced exactly (edges and non-edges) on the
/// connectivity matrix of every demanded type.
struct PlacementMapping {
  int request_id = 0;
  std::vector<int> assignment;

  bool operator==(const PlacementMapping&) const = default;
};

/// Enumerates every induced placement of the request topology, in a fixed
/// order: depth-first over request nodes sorted by descending degree then
/// index, candidate testbed nodes tried in ascending index. Automorphic
/// placements (same node set, different assignment) are distinct results.
/// With a limit, returns the first `limit` placements of that order.
std::vector<PlacementMapping> enumerate_induced_mappings(
    const Request& request, const TestbedTopology& testbed,
    std::optional<int> limit = std::nullopt);

/// Reference enumerator: tries every injective map of request nodes to
/// testbed nodes and keeps those satisfying the placement invariants,
/// checked directly against the matrices. Intended for small instances.
std::vector<PlacementMapping> brute_force_induced_mappings(
    const Request& request, const TestbedTopology& testbed);

/// Standalone check of the placement invariants for one assignment.
bool is_induced_placement(const Request& request, const TestbedTopology& testbed,
                          const std::vector<int>& assignment);

}  // namespace tbmap
