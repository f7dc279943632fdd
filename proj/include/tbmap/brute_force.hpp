#pragma once

#include <optional>
#include <vector>

#include "tbmap/ga_mapper.hpp"

namespace tbmap {

struct BruteForceStats {
  double search_space = 0.0;  // product over requests of (candidates + 1)
  long evaluated = 0;
};

/// Exhaustive minimum over the whole chromosome space {off, mapping 1..m_r}
/// per request, using precomputed candidates. Ties resolve to fewer
/// conflicts, then more served requests, then the lexicographically
/// smallest gene vector. Deterministic; throws SearchSpaceExceeded when the
/// space is larger than `search_space_cap`.
MapperSolution optimize_bf(const std::vector<Request>& requests,
                           const CandidateSets& candidates,
                           const TestbedTopology& testbed, const GAConfig& cfg,
                           double search_space_cap = 1e8,
                           BruteForceStats* stats = nullptr);

/// Candidate enumeration (optionally capped at mapping_limit) followed by
/// the exhaustive search.
MapperSolution brute_force_optimum(const std::vector<Request>& requests,
                                   const TestbedTopology& testbed,
                                   std::optional<int> mapping_limit, const GAConfig& cfg,
                                   double search_space_cap = 1e8,
                                   BruteForceStats* stats = nullptr);

}  // namespace tbmap
