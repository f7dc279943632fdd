#include "tbmap/testbed_model.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "tbmap/errors.hpp"

namespace tbmap {

AdjacencyMatrix AdjacencyMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  AdjacencyMatrix m(n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(rows[j].size()) != n)
      throw std::invalid_argument("matrix row " + std::to_string(j) + " is not of length " +
                                  std::to_string(n));
    for (int k = 0; k < n; ++k) {
      const int v = rows[j][k];
      if (v != 0 && v != 1)
        throw std::invalid_argument("matrix entries must be 0 or 1, got " + std::to_string(v));
      m.set_cell(j, k, v == 1);
    }
  }
  return m;
}

void AdjacencyMatrix::add_edge(int j, int k) {
  if (j == k) throw std::invalid_argument("self-loop on node " + std::to_string(j));
  if (j < 0 || k < 0 || j >= n_ || k >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  set_cell(j, k, true);
  set_cell(k, j, true);
}

int AdjacencyMatrix::degree(int node) const {
  int d = 0;
  for (int k = 0; k < n_; ++k)
    if (at(node, k)) ++d;
  return d;
}

long AdjacencyMatrix::edge_count() const {
  long e = 0;
  for (int j = 0; j < n_; ++j)
    for (int k = j + 1; k < n_; ++k)
      if (at(j, k)) ++e;
  return e;
}

bool AdjacencyMatrix::is_symmetric() const {
  for (int j = 0; j < n_; ++j)
    for (int k = j + 1; k < n_; ++k)
      if (at(j, k) != at(k, j)) return false;
  return true;
}

bool AdjacencyMatrix::has_zero_diagonal() const {
  for (int j = 0; j < n_; ++j)
    if (at(j, j)) return false;
  return true;
}

std::vector<std::vector<int>> AdjacencyMatrix::to_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_, 0));
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) rows[j][k] = at(j, k) ? 1 : 0;
  return rows;
}

void TestbedTopology::validate() const {
  if (n_nodes < 1) throw ConfigError("testbed must have at least one node");
  if (interface_types.empty()) throw ConfigError("testbed must have at least one interface type");
  for (std::size_t t = 0; t < interface_types.size(); ++t) {
    if (interface_types[t].id != static_cast<int>(t))
      throw ConfigError("interface ids must be contiguous from 0, position " + std::to_string(t) +
                        " has id " + std::to_string(interface_types[t].id));
    if (interface_types[t].max_channels < 1)
      throw ConfigError("interface type " + std::to_string(t) + " has max_channels < 1");
  }
  if (connectivity.size() != interface_types.size())
    throw ConfigError("expected one connectivity matrix per interface type");
  if (node_interfaces.size() !=
      static_cast<std::size_t>(n_nodes) * interface_types.size())
    throw ConfigError("node_interfaces has the wrong shape");
  for (std::size_t t = 0; t < connectivity.size(); ++t) {
    const AdjacencyMatrix& m = connectivity[t];
    const std::string where = "connectivity matrix " + std::to_string(t);
    if (m.size() != n_nodes) throw ConfigError(where + " is not " + std::to_string(n_nodes) + "x" +
                                               std::to_string(n_nodes));
    if (!m.is_symmetric()) throw ConfigError(where + " is asymmetric");
    if (!m.has_zero_diagonal()) throw ConfigError(where + " has a nonzero diagonal");
    for (int j = 0; j < n_nodes; ++j)
      for (int k = j + 1; k < n_nodes; ++k)
        if (m.at(j, k) &&
            (!node_has_interface(j, static_cast<int>(t)) ||
             !node_has_interface(k, static_cast<int>(t))))
          throw ConfigError(where + " links " + std::to_string(j) + "-" + std::to_string(k) +
                            " but one endpoint lacks that interface");
  }
}

std::vector<InterfaceType> default_interface_types() {
  return {{0, 13}, {1, 13}, {2, 40}};
}

namespace {

TestbedTopology replicate(int n_nodes, const AdjacencyMatrix& links,
                          std::vector<InterfaceType> interface_types) {
  TestbedTopology tb;
  tb.n_nodes = n_nodes;
  tb.interface_types = std::move(interface_types);
  tb.connectivity.assign(tb.interface_types.size(), links);
  tb.node_interfaces.assign(
      static_cast<std::size_t>(n_nodes) * tb.interface_types.size(), 1);
  tb.validate();
  return tb;
}

}  // namespace

TestbedTopology build_grid(int rows, int cols, std::vector<InterfaceType> interface_types) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("grid dimensions must be positive");
  const int n = rows * cols;
  AdjacencyMatrix links(n);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int node = r * cols + c;
      if (c + 1 < cols) links.add_edge(node, node + 1);
      if (r + 1 < rows) links.add_edge(node, node + cols);
    }
  }
  return replicate(n, links, std::move(interface_types));
}

TestbedTopology build_random(int n, double edge_prob, std::uint64_t seed,
                             std::vector<InterfaceType> interface_types) {
  if (n < 1) throw std::invalid_argument("node count must be positive");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  AdjacencyMatrix links(n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < edge_prob)
        links.add_edge(j, k);
    }
  }
  return replicate(n, links, std::move(interface_types));
}

TestbedTopology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open topology file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("topology parse error in " + path + ": " + e.what());
  }

  TestbedTopology tb;
  try {
    tb.n_nodes = doc.at("n_nodes").get<int>();
    for (const auto& it : doc.at("interface_types")) {
      InterfaceType t;
      t.id = it.at("id").get<int>();
      t.max_channels = it.at("max_channels").get<int>();
      tb.interface_types.push_back(t);
    }
    for (const auto& mat : doc.at("connectivity"))
      tb.connectivity.push_back(
          AdjacencyMatrix::from_rows(mat.get<std::vector<std::vector<int>>>()));
    const std::size_t cells =
        static_cast<std::size_t>(tb.n_nodes) * tb.interface_types.size();
    if (doc.contains("node_interfaces")) {
      auto rows = doc.at("node_interfaces").get<std::vector<std::vector<int>>>();
      if (rows.size() != static_cast<std::size_t>(tb.n_nodes))
        throw ConfigError("node_interfaces must have one row per node");
      tb.node_interfaces.assign(cells, 0);
      for (int node = 0; node < tb.n_nodes; ++node) {
        if (rows[node].size() != tb.interface_types.size())
          throw ConfigError("node_interfaces row " + std::to_string(node) +
                            " must have one entry per interface type");
        for (std::size_t t = 0; t < tb.interface_types.size(); ++t)
          tb.set_node_interface(node, static_cast<int>(t), rows[node][t] != 0);
      }
    } else {
      tb.node_interfaces.assign(cells, 1);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("topology format error in " + path + ": " + e.what());
  }
  tb.validate();
  return tb;
}

void save_topology(const TestbedTopology& testbed, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["n_nodes"] = testbed.n_nodes;
  doc["interface_types"] = nlohmann::ordered_json::array();
  for (const InterfaceType& t : testbed.interface_types)
    doc["interface_types"].push_back({{"id", t.id}, {"max_channels", t.max_channels}});
  doc["connectivity"] = nlohmann::ordered_json::array();
  for (const AdjacencyMatrix& m : testbed.connectivity) doc["connectivity"].push_back(m.to_rows());
  std::vector<std::vector<int>> ifaces(testbed.n_nodes,
                                       std::vector<int>(testbed.interface_count(), 0));
  for (int node = 0; node < testbed.n_nodes; ++node)
    for (int t = 0; t < testbed.interface_count(); ++t)
      ifaces[node][t] = testbed.node_has_interface(node, t) ? 1 : 0;
  doc["node_interfaces"] = ifaces;

  std::ofstream out(path);
  if (!out) throw RunError("cannot write topology file: " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace tbmap
