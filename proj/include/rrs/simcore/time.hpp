#pragma once

#include <compare>
#include <cstdint>

namespace rrs::sim {

// Milliseconds since scenario start. Also used for durations.
struct SimTime {
  std::int64_t ms = 0;

  static constexpr SimTime from_seconds(std::int64_t s) { return {s * 1000}; }
  static constexpr SimTime from_minutes(std::int64_t m) { return {m * 60'000}; }

  friend constexpr auto operator<=>(SimTime, SimTime) = default;
  friend constexpr SimTime operator+(SimTime a, SimTime b) { return {a.ms + b.ms}; }
  friend constexpr SimTime operator-(SimTime a, SimTime b) { return {a.ms - b.ms}; }
  constexpr SimTime& operator+=(SimTime o) {
    ms += o.ms;
    return *this;
  }
};

inline constexpr SimTime kTimeZero{0};

}  // namespace rrs::sim
