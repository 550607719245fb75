#include "rrs/ntn/topology.hpp"

#include <algorithm>

namespace rrs::ntn {

Topology Topology::from_scenario(const scenario::Scenario& s, sim::SimTime now) {
  Topology t;
  t.now = now;
  t.nonrt_window = s.ticks.nonrt;
  t.nodes = s.nodes;
  t.obstacles = s.obstacles;
  t.channel = s.channel;
  t.planner = s.planner;
  for (const auto& n : s.nodes) {
    if (n.live()) t.last_heartbeat[n.id] = now;
  }
  for (const auto& spec : s.panels) {
    const Node& n = s.node(spec.node);
    auto panel = spec.build(n.position);
    auto config = channel::RisConfig::zeros(panel.size());
    t.panels.push_back({std::move(panel), std::move(config), n.live()});
  }
  return t;
}

const Node* Topology::find(NodeId id) const {
  auto it = std::find_if(nodes.begin(), nodes.end(), [id](const Node& n) { return n.id == id; });
  return it == nodes.end() ? nullptr : &*it;
}

bool Topology::operational(const Node& node) const {
  if (!node.live()) return false;
  auto it = last_heartbeat.find(node.id);
  if (it == last_heartbeat.end()) return false;
  return now - it->second <= nonrt_window;
}

NodeId Topology::next_id() const {
  NodeId id = 0;
  for (const auto& n : nodes) id = std::max(id, n.id);
  return id + 1;
}

channel::RadioEnvironment Topology::environment() const {
  return channel::RadioEnvironment(channel, obstacles, panels);
}

channel::Endpoint ue_endpoint(const Node& ue) {
  return {ue.id, ue.position, ue.freq_ghz * 1e9, ue.tx_power_dbm, false};
}

double access_snr_db(const channel::RadioEnvironment& env, const Node& ap, Vec3 ue_position) {
  return env.path_loss_snr_db(ap.endpoint(), {0, ue_position, ap.freq_ghz * 1e9, 0.0, false});
}

}  // namespace rrs::ntn
