#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tbmap {

/// One kind of wireless interface carried by testbed nodes, together with
/// its budget of orthogonal channels.
struct InterfaceType {
  int id = 0;
  int max_channels = 1;

  bool operator==(const InterfaceType&) const = default;
};

/// Square 0/1 matrix used for both testbed connectivity and requested
/// topologies. Valid instances are symmetric with a zero diagonal; raw
/// cell access exists so loaders can fill a matrix first and validate it
/// afterwards with a precise error.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  /// Builds from nested rows. Throws std::invalid_argument on a non-square
  /// shape or entries outside {0,1}. Symmetry is not checked here.
  static AdjacencyMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  bool at(int j, int k) const { return cells_[index(j, k)] != 0; }
  void set_cell(int j, int k, bool present) { cells_[index(j, k)] = present ? 1 : 0; }

  /// Adds an undirected edge; loops are rejected.
  void add_edge(int j, int k);

  int degree(int node) const;
  long edge_count() const;
  bool is_symmetric() const;
  bool has_zero_diagonal() const;

  std::vector<std::vector<int>> to_rows() const;

  bool operator==(const AdjacencyMatrix&) const = default;

 private:
  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(k);
  }

  int n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// The physical testbed: per-interface-type connectivity over the same node
/// set, plus which node carries which interface type. Immutable by
/// convention once built; nothing here mutates after construction.
struct TestbedTopology {
  int n_nodes = 0;
  std::vector<InterfaceType> interface_types;
  /// One matrix per interface type, indexed by interface id.
  std::vector<AdjacencyMatrix> connectivity;
  /// Row-major n_nodes x interface_count booleans.
  std::vector<std::uint8_t> node_interfaces;

  int interface_count() const { return static_cast<int>(interface_types.size()); }

  bool node_has_interface(int node, int type) const {
    return node_interfaces[static_cast<std::size_t>(node) * interface_types.size() +
                           static_cast<std::size_t>(type)] != 0;
  }

  void set_node_interface(int node, int type, bool present) {
    node_interfaces[static_cast<std::size_t>(node) * interface_types.size() +
                    static_cast<std::size_t>(type)] = present ? 1 : 0;
  }

  int max_channels_of(int type) const { return interface_types[type].max_channels; }

  /// Checks all structural invariants (shapes, symmetry, zero diagonals,
  /// contiguous interface ids, links only between nodes that carry the
  /// interface). Throws ConfigError naming the first violation.
  void validate() const;
};

/// The default three-interface inventory with channel budgets 13, 13, 40.
std::vector<InterfaceType> default_interface_types();

/// rows x cols 4-neighbour grid, replicated across all interface types;
/// every node carries every interface type.
TestbedTopology build_grid(int rows, int cols,
                           std::vector<InterfaceType> interface_types = default_interface_types());

/// Independent-edge random graph: each unordered pair is an edge with
/// probability edge_prob. Pure function of (n, edge_prob, seed).
TestbedTopology build_random(int n, double edge_prob, std::uint64_t seed,
                             std::vector<InterfaceType> interface_types = default_interface_types());

/// Reads a topology from the JSON format described in the README and
/// validates it. Throws ConfigError on parse or invariant failures.
TestbedTopology load_topology(const std::string& path);

void save_topology(const TestbedTopology& testbed, const std::string& path);

}  // namespace tbmap
