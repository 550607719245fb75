#pragma once

#include <map>
#include <vector>

#include "rrs/channel/radio_environment.hpp"
#include "rrs/scenario/scenario.hpp"

namespace rrs::ntn {

using scenario::Node;
using scenario::NodeId;
using scenario::NodeKind;
using scenario::NodeStatus;

// Immutable picture of the network handed to planners and controller apps.
struct Topology {
  sim::SimTime now{0};
  sim::SimTime nonrt_window{60'000};
  std::vector<Node> nodes;
  // Last heartbeat heard from each node; a missing entry means never heard.
  std::map<NodeId, sim::SimTime> last_heartbeat;
  std::vector<Box> obstacles;
  channel::ChannelParams channel;
  std::vector<channel::PanelInstance> panels;
  scenario::PlannerParams planner;

  // Every live node has just reported.
  static Topology from_scenario(const scenario::Scenario& s, sim::SimTime now = sim::kTimeZero);

  const Node* find(NodeId id) const;
  // Live status and a heartbeat inside the last Non-RT window.
  bool operational(const Node& node) const;
  NodeId next_id() const;
  channel::RadioEnvironment environment() const;
};

channel::Endpoint ue_endpoint(const Node& ue);
// Direct-path SNR from an access node to a point at UE height.
double access_snr_db(const channel::RadioEnvironment& env, const Node& ap, Vec3 ue_position);

}  // namespace rrs::ntn
