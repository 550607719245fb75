#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "rrs/common/geometry.hpp"
#include "rrs/simcore/time.hpp"

namespace rrs::sim {

enum class EventKind {
  DisasterStrike,
  BatteryExpiry,
  HeartbeatDue,
  NonRtTick,
  NearRtTick,
  UeMove,
  MeasurementDone,
};

std::string_view to_string(EventKind kind);

struct DisasterPayload {
  std::size_t disaster_index = 0;
};
struct NodePayload {
  std::uint32_t node_id = 0;
};
// Empty node => periodic sweep over every live node.
struct HeartbeatPayload {
  std::optional<std::uint32_t> node_id;
};
struct AppTickPayload {
  std::size_t app_index = 0;
};
struct UeMovePayload {
  std::uint32_t ue_id = 0;
  Vec3 position;
};

using EventPayload = std::variant<std::monostate, DisasterPayload, NodePayload, HeartbeatPayload,
                                  AppTickPayload, UeMovePayload>;

struct Event {
  SimTime fire_time;
  EventKind kind = EventKind::MeasurementDone;
  EventPayload payload;
  // Assigned by the kernel on schedule() when left empty.
  std::optional<std::uint64_t> sequence_id;
};

}  // namespace rrs::sim
