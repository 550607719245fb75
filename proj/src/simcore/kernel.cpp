#include "rrs/simcore/kernel.hpp"

#include <algorithm>
#include <exception>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::sim {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::DisasterStrike: return "DisasterStrike";
    case EventKind::BatteryExpiry: return "BatteryExpiry";
    case EventKind::HeartbeatDue: return "HeartbeatDue";
    case EventKind::NonRtTick: return "NonRtTick";
    case EventKind::NearRtTick: return "NearRtTick";
    case EventKind::UeMove: return "UeMove";
    case EventKind::MeasurementDone: return "MeasurementDone";
  }
  return "Unknown";
}

bool Kernel::Later::operator()(const Entry& a, const Entry& b) const {
  if (a.event.fire_time != b.event.fire_time) return a.event.fire_time > b.event.fire_time;
  if (*a.event.sequence_id != *b.event.sequence_id) {
    return *a.event.sequence_id > *b.event.sequence_id;
  }
  return a.insertion > b.insertion;
}

std::uint64_t Kernel::schedule(Event event) {
  if (event.fire_time < clock_) {
    throw Error(ErrorCode::PastEvent,
                fmt::format("{} at t={} ms scheduled while clock is {} ms", to_string(event.kind),
                            event.fire_time.ms, clock_.ms));
  }
  if (event.sequence_id) {
    next_sequence_ = std::max(next_sequence_, *event.sequence_id + 1);
  } else {
    event.sequence_id = next_sequence_++;
  }
  const auto id = *event.sequence_id;
  queue_.push({std::move(event), insertions_++});
  return id;
}

MetricsLog& Kernel::run_until(SimTime t_end) {
  if (t_end < clock_) {
    throw Error(ErrorCode::PastEvent,
                fmt::format("run_until({}) while clock is {} ms", t_end.ms, clock_.ms));
  }
  while (!queue_.empty() && queue_.top().event.fire_time <= t_end) {
    Event event = queue_.top().event;
    queue_.pop();
    clock_ = event.fire_time;
    if (!handler_) continue;
    try {
      handler_(event);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::EventHandler,
                  fmt::format("{} (seq {}) at t={} ms: {}", to_string(event.kind),
                              *event.sequence_id, event.fire_time.ms, e.what()));
    }
  }
  clock_ = t_end;
  return metrics_;
}

}  // namespace rrs::sim
