#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "rrs/channel/radio_environment.hpp"
#include "rrs/common/geometry.hpp"

namespace rrs::scenario {

using NodeId = std::uint32_t;

enum class NodeKind { TerrestrialBS, MobileBS, UAV, Satellite, RisPanel, UE, Gateway };
enum class NodeStatus { Operational, Failed, OnBattery, Deploying, Active };

std::string_view to_string(NodeKind kind);
std::string_view to_string(NodeStatus status);
std::optional<NodeKind> parse_node_kind(std::string_view s);
std::optional<NodeStatus> parse_node_status(std::string_view s);

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::UE;
  Vec3 position;
  NodeStatus status = NodeStatus::Operational;
  double tx_power_dbm = 0.0;
  double freq_ghz = 3.5;
  std::int64_t battery_ms = 0;  // meaningful only while OnBattery

  // Powered and carrying traffic.
  bool live() const {
    return status == NodeStatus::Operational || status == NodeStatus::OnBattery ||
           status == NodeStatus::Active;
  }
  // Terrestrial and UAV radio units serve UEs; satellites only backhaul.
  bool is_access() const {
    return kind == NodeKind::TerrestrialBS || kind == NodeKind::MobileBS || kind == NodeKind::UAV;
  }
  bool aerial() const { return kind == NodeKind::UAV; }
  bool infrastructure() const { return kind != NodeKind::UE; }

  channel::Endpoint endpoint() const {
    return {id, position, freq_ghz * 1e9, tx_power_dbm, aerial()};
  }

  friend bool operator==(const Node&, const Node&) = default;
};

}  // namespace rrs::scenario
