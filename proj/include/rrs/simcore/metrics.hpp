#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrs/simcore/time.hpp"

namespace rrs::sim {

struct UeThroughput {
  std::uint32_t ue_id = 0;
  double mbps = 0.0;

  friend bool operator==(const UeThroughput&, const UeThroughput&) = default;
};

struct Sample {
  SimTime time;
  double coverage_ratio = 0.0;
  std::vector<UeThroughput> throughput;
  std::size_t active_nodes = 0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

enum class ActionCategory {
  DisasterStrike,
  BatteryExpiry,
  NodeActivated,
  Controller,
  AppError,
  Note,
};

std::string_view to_string(ActionCategory category);

struct ActionRecord {
  SimTime time;
  ActionCategory category = ActionCategory::Note;
  std::string description;

  friend bool operator==(const ActionRecord&, const ActionRecord&) = default;
};

class MetricsLog {
 public:
  // Sample times must be strictly increasing; coverage ratio in [0, 1].
  void add_sample(Sample sample);
  void log_action(SimTime time, ActionCategory category, std::string description);

  const std::vector<Sample>& samples() const { return samples_; }
  const std::vector<ActionRecord>& actions() const { return actions_; }

  std::optional<SimTime> first_strike() const;

  friend bool operator==(const MetricsLog&, const MetricsLog&) = default;

 private:
  std::vector<Sample> samples_;
  std::vector<ActionRecord> actions_;
};

inline constexpr SimTime kDefaultRecoveryHold{10'000};

// Time from the first DisasterStrike until coverage holds at or above
// target_fraction * baseline for `hold`, treating coverage as a step function
// of the samples. nullopt means not recovered within the observed horizon.
// Throws NoDisaster if the log records no strike.
std::optional<SimTime> recovery_time(const MetricsLog& log, double baseline,
                                     double target_fraction,
                                     SimTime hold = kDefaultRecoveryHold);

// One row per (sample, UE): time_ms,coverage_ratio,ue_id,throughput_mbps
void write_metrics_csv(std::ostream& out, const MetricsLog& log);
void write_actions_log(std::ostream& out, const MetricsLog& log);

}  // namespace rrs::sim
