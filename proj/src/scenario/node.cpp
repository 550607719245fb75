#include "rrs/scenario/node.hpp"

#include <array>
#include <utility>

namespace rrs::scenario {

namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 7> kKinds{{
    {NodeKind::TerrestrialBS, "TerrestrialBS"},
    {NodeKind::MobileBS, "MobileBS"},
    {NodeKind::UAV, "UAV"},
    {NodeKind::Satellite, "Satellite"},
    {NodeKind::RisPanel, "RisPanel"},
    {NodeKind::UE, "UE"},
    {NodeKind::Gateway, "Gateway"},
}};

constexpr std::array<std::pair<NodeStatus, std::string_view>, 5> kStatuses{{
    {NodeStatus::Operational, "Operational"},
    {NodeStatus::Failed, "Failed"},
    {NodeStatus::OnBattery, "OnBattery"},
    {NodeStatus::Deploying, "Deploying"},
    {NodeStatus::Active, "Active"},
}};

}  // namespace

std::string_view to_string(NodeKind kind) {
  for (const auto& [k, name] : kKinds) {
    if (k == kind) return name;
  }
  return "Unknown";
}

std::string_view to_string(NodeStatus status) {
  for (const auto& [s, name] : kStatuses) {
    if (s == status) return name;
  }
  return "Unknown";
}

std::optional<NodeKind> parse_node_kind(std::string_view s) {
  for (const auto& [k, name] : kKinds) {
    if (name == s) return k;
  }
  return std::nullopt;
}

std::optional<NodeStatus> parse_node_status(std::string_view s) {
  for (const auto& [st, name] : kStatuses) {
    if (name == s) return st;
  }
  return std::nullopt;
}

}  // namespace rrs::scenario
