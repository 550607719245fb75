#include "rrs/scenario/scenario.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::scenario {

namespace {

void fail(const std::string& what) { throw Error(ErrorCode::ValidationError, what); }

}  // namespace

channel::RisPanel RisPanelSpec::build(Vec3 center) const {
  channel::PanelPose pose{center, column_axis, row_axis};
  auto panel = channel::RisPanel::planar(node, pose, rows, cols, pitch_m, states);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (auto e : parts[p]) {
      if (e < panel.part_of.size()) panel.part_of[e] = p;
    }
  }
  return panel;
}

const Node* Scenario::find_node(NodeId id) const {
  auto it = std::find_if(nodes.begin(), nodes.end(), [id](const Node& n) { return n.id == id; });
  return it == nodes.end() ? nullptr : &*it;
}

const Node& Scenario::node(NodeId id) const {
  const Node* n = find_node(id);
  if (!n) throw Error(ErrorCode::UnknownNode, fmt::format("node {} not in scenario", id));
  return *n;
}

const RisPanelSpec* Scenario::find_panel(NodeId id) const {
  auto it = std::find_if(panels.begin(), panels.end(),
                         [id](const RisPanelSpec& p) { return p.node == id; });
  return it == panels.end() ? nullptr : &*it;
}

void Scenario::validate() const {
  std::set<NodeId> ids;
  for (const auto& n : nodes) {
    if (!ids.insert(n.id).second) fail(fmt::format("node ids unique (duplicate id {})", n.id));
    if (n.kind == NodeKind::UAV && !(n.position.z > 0.0)) {
      fail(fmt::format("UAV altitude > 0 (node {})", n.id));
    }
    if (n.status == NodeStatus::OnBattery && n.battery_ms <= 0) {
      fail(fmt::format("OnBattery implies battery_ms > 0 (node {})", n.id));
    }
    if (n.infrastructure() && n.kind != NodeKind::RisPanel && !(n.freq_ghz > 0.0)) {
      fail(fmt::format("carrier frequency > 0 (node {})", n.id));
    }
  }
  if (std::none_of(nodes.begin(), nodes.end(),
                   [](const Node& n) { return n.kind == NodeKind::Gateway; })) {
    fail("at least one Gateway");
  }
  if (ticks.nonrt.ms <= 0 || ticks.nearrt.ms <= 0 || ticks.sample.ms <= 0 ||
      ticks.heartbeat.ms <= 0) {
    fail("tick durations > 0");
  }
  if (battery_reserve.ms <= 0) fail("battery reserve > 0");
  if (!(recovery.target_fraction > 0.0 && recovery.target_fraction <= 1.0)) {
    fail("recovery target fraction in (0, 1]");
  }
  if (cfmimo.cluster_size < 1) fail("cfmimo cluster size >= 1");
  if (cfmimo.realizations < 1) fail("cfmimo realizations >= 1");
  traffic.validate();

  for (std::size_t i = 0; i < disasters.size(); ++i) inject_disaster(*this, i);

  for (const auto& p : panels) {
    const Node& n = node(p.node);
    if (n.kind != NodeKind::RisPanel) fail(fmt::format("panel spec {} is not a RisPanel", p.node));
    if (p.rows * p.cols == 0) fail(fmt::format("panel {} has N > 0", p.node));
    const auto panel = p.build(n.position);
    std::vector<int> owner(panel.size(), p.parts.empty() ? 0 : -1);
    for (std::size_t part = 0; part < p.parts.size(); ++part) {
      for (auto e : p.parts[part]) {
        if (e >= owner.size()) fail(fmt::format("panel {} part {} element {} out of range", p.node, part, e));
        if (owner[e] >= 0) {
          throw Error(ErrorCode::Overlap,
                      fmt::format("panel {} element {} in two parts", p.node, e));
        }
        owner[e] = static_cast<int>(part);
      }
    }
    for (std::size_t e = 0; e < owner.size(); ++e) {
      if (owner[e] < 0) {
        throw Error(ErrorCode::UncoveredElement,
                    fmt::format("panel {} element {} belongs to no part", p.node, e));
      }
    }
    panel.validate();
    const std::size_t part_count = std::max<std::size_t>(1, p.parts.size());
    for (const auto& [part, ue] : p.part_ue) {
      if (part >= part_count) fail(fmt::format("panel {} assigns missing part {}", p.node, part));
      if (node(ue).kind != NodeKind::UE) fail(fmt::format("panel {} part {} serves non-UE {}", p.node, part, ue));
    }
    for (const auto& cb : p.codebooks) {
      if (cb.part >= part_count) fail(fmt::format("panel {} codebook for missing part {}", p.node, cb.part));
      if (!node(cb.tx).is_access()) fail(fmt::format("panel {} codebook tx {} is not an access node", p.node, cb.tx));
      if (cb.angles_deg.empty()) fail(fmt::format("panel {} codebook grid non-empty", p.node));
    }
  }
  for (const auto& t : trajectories) {
    if (node(t.ue).kind != NodeKind::UE) fail(fmt::format("trajectory for non-UE {}", t.ue));
    for (std::size_t i = 1; i < t.waypoints.size(); ++i) {
      if (t.waypoints[i].at <= t.waypoints[i - 1].at) {
        fail(fmt::format("trajectory waypoints of UE {} in increasing time", t.ue));
      }
    }
  }
}

std::vector<sim::Event> inject_disaster(const Scenario& scenario, std::size_t disaster_index) {
  return inject_disaster(scenario, scenario.disasters.at(disaster_index), disaster_index);
}

std::vector<sim::Event> inject_disaster(const Scenario& scenario, const DisasterEvent& event,
                                        std::size_t disaster_index) {
  for (auto id : event.failed) scenario.node(id);
  for (auto id : event.power_loss) scenario.node(id);
  for (auto id : event.failed) {
    if (std::find(event.power_loss.begin(), event.power_loss.end(), id) != event.power_loss.end()) {
      fail(fmt::format("failure set and power-loss set disjoint (node {})", id));
    }
  }
  if (event.strike.ms < 0) fail("strike time >= 0");

  std::vector<sim::Event> out;
  out.push_back({event.strike, sim::EventKind::DisasterStrike,
                 sim::DisasterPayload{disaster_index}, std::nullopt});
  for (auto id : event.power_loss) {
    out.push_back({event.strike + scenario.battery_reserve, sim::EventKind::BatteryExpiry,
                   sim::NodePayload{id}, std::nullopt});
  }
  return out;
}

}  // namespace rrs::scenario
