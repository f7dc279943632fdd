#include "tbmap/request_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "tbmap/errors.hpp"

namespace tbmap {

namespace {

int draw_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double draw_normal(std::mt19937_64& rng, double mean, double sd) {
  return std::normal_distribution<double>(mean, sd)(rng);
}

}  // namespace

std::vector<Request> generate_requests(int count, const TestbedTopology& testbed,
                                       std::uint64_t seed, const GeneratorParams& params) {
  if (count < 1) throw std::invalid_argument("request count must be positive");
  const int n_types = testbed.interface_count();
  if (n_types < 1) throw std::invalid_argument("testbed has no interface types");
  if (params.min_nodes < 1 || params.max_nodes < params.min_nodes)
    throw std::invalid_argument("bad node count range");
  if (params.priority_min < 1 || params.priority_max > 5 ||
      params.priority_max < params.priority_min)
    throw std::invalid_argument("priority range must lie within [1,5]");

  std::mt19937_64 rng(seed);
  std::vector<Request> requests;
  requests.reserve(count);

  for (int i = 0; i < count; ++i) {
    Request r;
    r.id = i;
    r.node_kind = params.virtual_nodes ? NodeKind::virtual_node : NodeKind::physical;

    r.n_nodes = draw_int(rng, params.min_nodes, params.max_nodes);
    r.topology = AdjacencyMatrix(r.n_nodes);
    for (int j = 0; j < r.n_nodes; ++j)
      for (int k = j + 1; k < r.n_nodes; ++k)
        if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < params.topology_edge_prob)
          r.topology.add_edge(j, k);

    const int max_types = std::min(params.max_interface_types, n_types);
    const int min_types = std::min(params.min_interface_types, max_types);
    const int k_types = draw_int(rng, min_types, max_types);

    // partial Fisher-Yates over the type ids, then sorted for a canonical
    // demand order
    std::vector<int> pool(n_types);
    std::iota(pool.begin(), pool.end(), 0);
    for (int j = 0; j < k_types; ++j)
      std::swap(pool[j], pool[draw_int(rng, j, n_types - 1)]);
    std::vector<int> chosen(pool.begin(), pool.begin() + k_types);
    std::sort(chosen.begin(), chosen.end());

    for (int type : chosen) {
      const int max_ch = testbed.max_channels_of(type);
      const double raw = draw_normal(rng, params.channel_mean_frac * max_ch,
                                     params.channel_sd_frac * max_ch);
      const int hi = std::max(1, max_ch / 2);
      ChannelDemand d;
      d.interface_type = type;
      d.mode = ChannelMode::flexible;
      d.flexible_count = std::clamp(static_cast<int>(std::llround(raw)), 1, hi);
      r.demands.push_back(std::move(d));
    }

    r.priority_rank = draw_int(rng, params.priority_min, params.priority_max);

    const double dur = draw_normal(rng, params.duration_mean, params.duration_sd);
    r.duration_slots = std::max(1, static_cast<int>(std::llround(dur)));

    requests.push_back(std::move(r));
  }
  return requests;
}

std::vector<std::string> validate_request(const Request& r, const TestbedTopology& testbed) {
  std::vector<std::string> errors;
  const auto fail = [&](const std::string& msg) {
    errors.push_back("request " + std::to_string(r.id) + ": " + msg);
  };

  if (r.n_nodes < 1) fail("node count must be positive");
  if (r.topology.size() != r.n_nodes)
    fail("topology matrix is " + std::to_string(r.topology.size()) + "x" +
         std::to_string(r.topology.size()) + " but n_nodes is " + std::to_string(r.n_nodes));
  if (!r.topology.is_symmetric()) fail("topology matrix is asymmetric");
  if (!r.topology.has_zero_diagonal()) fail("topology matrix has a nonzero diagonal");
  if (r.demands.empty()) fail("at least one interface type must be demanded");
  if (r.duration_slots < 1) fail("duration must be at least one slot");
  if (r.priority_rank < 1 || r.priority_rank > 5) fail("priority rank must lie in [1,5]");

  std::set<int> seen_types;
  for (const ChannelDemand& d : r.demands) {
    if (!seen_types.insert(d.interface_type).second) {
      fail("duplicate demand for interface type " + std::to_string(d.interface_type));
      continue;
    }
    if (d.interface_type < 0 || d.interface_type >= testbed.interface_count()) {
      fail("interface type " + std::to_string(d.interface_type) + " does not exist");
      continue;
    }
    const int max_ch = testbed.max_channels_of(d.interface_type);
    if (d.mode == ChannelMode::fixed) {
      if (d.fixed_channels.empty()) fail("fixed demand lists no channels");
      std::set<int> seen_ch;
      for (int ch : d.fixed_channels) {
        if (ch < 0 || ch >= max_ch)
          fail("fixed channel " + std::to_string(ch) + " outside [0," + std::to_string(max_ch) +
               ") on type " + std::to_string(d.interface_type));
        if (!seen_ch.insert(ch).second)
          fail("fixed channel " + std::to_string(ch) + " listed twice on type " +
               std::to_string(d.interface_type));
      }
    } else {
      if (d.flexible_count < 1 || d.flexible_count > max_ch)
        fail("flexible count " + std::to_string(d.flexible_count) + " outside [1," +
             std::to_string(max_ch) + "] on type " + std::to_string(d.interface_type));
    }
  }
  return errors;
}

namespace {

nlohmann::ordered_json demand_to_json(const ChannelDemand& d) {
  nlohmann::ordered_json out;
  out["interface_type"] = d.interface_type;
  if (d.mode == ChannelMode::fixed) {
    out["mode"] = "fixed";
    out["channels"] = d.fixed_channels;
  } else {
    out["mode"] = "flexible";
    out["count"] = d.flexible_count;
  }
  return out;
}

ChannelDemand demand_from_json(const nlohmann::json& in) {
  ChannelDemand d;
  d.interface_type = in.at("interface_type").get<int>();
  const std::string mode = in.at("mode").get<std::string>();
  if (mode == "fixed") {
    d.mode = ChannelMode::fixed;
    d.fixed_channels = in.at("channels").get<std::vector<int>>();
  } else if (mode == "flexible") {
    d.mode = ChannelMode::flexible;
    d.flexible_count = in.at("count").get<int>();
  } else {
    throw ConfigError("unknown demand mode: " + mode);
  }
  return d;
}

}  // namespace

std::vector<Request> load_requests(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open request file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("request parse error in " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw ConfigError("request file must hold a JSON array");

  std::vector<Request> requests;
  try {
    for (const auto& item : doc) {
      Request r;
      r.id = item.at("id").get<int>();
      r.n_nodes = item.at("n_nodes").get<int>();
      r.topology =
          AdjacencyMatrix::from_rows(item.at("topology").get<std::vector<std::vector<int>>>());
      for (const auto& d : item.at("demands")) r.demands.push_back(demand_from_json(d));
      const std::string kind = item.at("node_kind").get<std::string>();
      if (kind == "physical")
        r.node_kind = NodeKind::physical;
      else if (kind == "virtual")
        r.node_kind = NodeKind::virtual_node;
      else
        throw ConfigError("unknown node_kind: " + kind);
      r.duration_slots = item.at("duration_slots").get<int>();
      r.priority_rank = item.at("priority_rank").get<int>();
      requests.push_back(std::move(r));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("request format error in " + path + ": " + e.what());
  }
  return requests;
}

void save_requests(const std::vector<Request>& requests, const std::string& path) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const Request& r : requests) {
    nlohmann::ordered_json item;
    item["id"] = r.id;
    item["n_nodes"] = r.n_nodes;
    item["topology"] = r.topology.to_rows();
    item["demands"] = nlohmann::ordered_json::array();
    for (const ChannelDemand& d : r.demands) item["demands"].push_back(demand_to_json(d));
    item["node_kind"] = r.node_kind == NodeKind::physical ? "physical" : "virtual";
    item["duration_slots"] = r.duration_slots;
    item["priority_rank"] = r.priority_rank;
    doc.push_back(std::move(item));
  }
  std::ofstream out(path);
  if (!out) throw RunError("cannot write request file: " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace tbmap
