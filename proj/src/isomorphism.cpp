#include "tbmap/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace tbmap {

namespace {

std::vector<int> demanded_types(const Request& request) {
  std::vector<int> types;
  types.reserve(request.demands.size());
  for (const ChannelDemand& d : request.demands) types.push_back(d.interface_type);
  return types;
}

/// Testbed nodes usable by the request at all: carry every demanded type.
std::vector<std::uint8_t> usable_nodes(const TestbedTopology& testbed,
                                       const std::vector<int>& types) {
  std::vector<std::uint8_t> ok(testbed.n_nodes, 1);
  for (int node = 0; node < testbed.n_nodes; ++node)
    for (int t : types) {
      if (t < 0 || t >= testbed.interface_count() || !testbed.node_has_interface(node, t)) {
        ok[node] = 0;
        break;
      }
    }
  return ok;
}

/// Backtracking matcher. Request nodes are placed in a fixed search order
/// (descending degree, then index); at each depth every already-placed pair
/// is checked for edge-and-nonedge equality on every demanded interface
/// type, so partial assignments are always consistent and every leaf is a
/// valid placement.
class InducedMatcher {
 public:
  InducedMatcher(const Request& request, const TestbedTopology& testbed, long limit)
      : request_(request),
        testbed_(testbed),
        limit_(limit),
        types_(demanded_types(request)),
        usable_(usable_nodes(testbed, types_)),
        assignment_(request.n_nodes, -1),
        used_(testbed.n_nodes, 0) {
    order_.resize(request.n_nodes);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return request.topology.degree(a) > request.topology.degree(b);
    });
  }

  std::vector<PlacementMapping> run() {
    if (request_.n_nodes <= testbed_.n_nodes) extend(0);
    return std::move(results_);
  }

 private:
  void extend(int depth) {
    if (static_cast<long>(results_.size()) == limit_) return;
    if (depth == request_.n_nodes) {
      results_.push_back({request_.id, assignment_});
      return;
    }
    const int p = order_[depth];
    for (int cand = 0; cand < testbed_.n_nodes; ++cand) {
      if (used_[cand] || !usable_[cand]) continue;
      if (!consistent(p, cand, depth)) continue;
      assignment_[p] = cand;
      used_[cand] = 1;
      extend(depth + 1);
      used_[cand] = 0;
      assignment_[p] = -1;
      if (static_cast<long>(results_.size()) == limit_) return;
    }
  }

  bool consistent(int p, int cand, int depth) const {
    for (int d = 0; d < depth; ++d) {
      const int q = order_[d];
      const bool want_edge = request_.topology.at(p, q);
      for (int t : types_)
        if (testbed_.connectivity[t].at(cand, assignment_[q]) != want_edge) return false;
    }
    return true;
  }

  const Request& request_;
  const TestbedTopology& testbed_;
  const long limit_;
  std::vector<int> types_;
  std::vector<std::uint8_t> usable_;
  std::vector<int> order_;
  std::vector<int> assignment_;
  std::vector<std::uint8_t> used_;
  std::vector<PlacementMapping> results_;
};

}  // namespace

std::vector<PlacementMapping> enumerate_induced_mappings(const Request& request,
                                                         const TestbedTopology& testbed,
                                                         std::optional<int> limit) {
  if (limit && *limit < 1) throw std::invalid_argument("mapping limit must be positive");
  InducedMatcher matcher(request, testbed, limit ? static_cast<long>(*limit) : -1);
  return matcher.run();
}

bool is_induced_placement(const Request& request, const TestbedTopology& testbed,
                          const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != request.n_nodes) return false;
  for (std::size_t p = 0; p < assignment.size(); ++p) {
    const int node = assignment[p];
    if (node < 0 || node >= testbed.n_nodes) return false;
    for (std::size_t q = p + 1; q < assignment.size(); ++q)
      if (assignment[q] == node) return false;
  }
  for (const ChannelDemand& d : request.demands) {
    const int t = d.interface_type;
    if (t < 0 || t >= testbed.interface_count()) return false;
    for (int node : assignment)
      if (!testbed.node_has_interface(node, t)) return false;
    for (int p = 0; p < request.n_nodes; ++p)
      for (int q = p + 1; q < request.n_nodes; ++q)
        if (request.topology.at(p, q) != testbed.connectivity[t].at(assignment[p], assignment[q]))
          return false;
  }
  return true;
}

std::vector<PlacementMapping> brute_force_induced_mappings(const Request& request,
                                                           const TestbedTopology& testbed) {
  std::vector<PlacementMapping> results;
  if (request.n_nodes < 1 || request.n_nodes > testbed.n_nodes) return results;

  // Odometer over all injective tuples in lexicographic order; the validity
  // check is the standalone one, independent of the backtracking matcher.
  std::vector<int> assignment(request.n_nodes, -1);
  std::vector<std::uint8_t> used(testbed.n_nodes, 0);
  int pos = 0;
  assignment[0] = -1;
  while (pos >= 0) {
    if (assignment[pos] >= 0) used[assignment[pos]] = 0;
    int next = assignment[pos] + 1;
    while (next < testbed.n_nodes && used[next]) ++next;
    if (next == testbed.n_nodes) {
      assignment[pos] = -1;
      --pos;
      continue;
    }
    assignment[pos] = next;
    used[next] = 1;
    if (pos + 1 == request.n_nodes) {
      if (is_induced_placement(request, testbed, assignment))
        results.push_back({request.id, assignment});
    } else {
      ++pos;
      assignment[pos] = -1;
    }
  }
  return results;
}

}  // namespace tbmap
