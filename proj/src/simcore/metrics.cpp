#include "rrs/simcore/metrics.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::sim {

std::string_view to_string(ActionCategory category) {
  switch (category) {
    case ActionCategory::DisasterStrike: return "DisasterStrike";
    case ActionCategory::BatteryExpiry: return "BatteryExpiry";
    case ActionCategory::NodeActivated: return "NodeActivated";
    case ActionCategory::Controller: return "Controller";
    case ActionCategory::AppError: return "AppError";
    case ActionCategory::Note: return "Note";
  }
  return "Unknown";
}

void MetricsLog::add_sample(Sample sample) {
  if (!samples_.empty() && sample.time <= samples_.back().time) {
    throw Error(ErrorCode::ValidationError,
                fmt::format("sample time {} not after {}", sample.time.ms, samples_.back().time.ms));
  }
  if (!(sample.coverage_ratio >= 0.0 && sample.coverage_ratio <= 1.0)) {
    throw Error(ErrorCode::ValidationError,
                fmt::format("coverage ratio {} outside [0,1]", sample.coverage_ratio));
  }
  samples_.push_back(std::move(sample));
}

void MetricsLog::log_action(SimTime time, ActionCategory category, std::string description) {
  actions_.push_back({time, category, std::move(description)});
}

std::optional<SimTime> MetricsLog::first_strike() const {
  for (const auto& a : actions_) {
    if (a.category == ActionCategory::DisasterStrike) return a.time;
  }
  return std::nullopt;
}

std::optional<SimTime> recovery_time(const MetricsLog& log, double baseline,
                                     double target_fraction, SimTime hold) {
  if (!(baseline > 0.0 && baseline <= 1.0)) {
    throw Error(ErrorCode::ValidationError, fmt::format("baseline {} outside (0,1]", baseline));
  }
  if (!(target_fraction > 0.0 && target_fraction <= 1.0)) {
    throw Error(ErrorCode::ValidationError,
                fmt::format("target fraction {} outside (0,1]", target_fraction));
  }
  const auto strike = log.first_strike();
  if (!strike) throw Error(ErrorCode::NoDisaster, "metrics log records no disaster strike");

  const double threshold = target_fraction * baseline;
  const auto& samples = log.samples();

  // Start from the sample in effect at strike time.
  auto it = std::upper_bound(samples.begin(), samples.end(), *strike,
                             [](SimTime t, const Sample& s) { return t < s.time; });
  if (it != samples.begin()) --it;

  std::optional<SimTime> run_start;
  for (; it != samples.end(); ++it) {
    if (run_start && it->time >= *run_start + hold) return *run_start - *strike;
    if (it->coverage_ratio < threshold) {
      run_start.reset();
    } else if (!run_start) {
      run_start = std::max(it->time, *strike);
    }
  }
  return std::nullopt;
}

void write_metrics_csv(std::ostream& out, const MetricsLog& log) {
  out << "time_ms,coverage_ratio,ue_id,throughput_mbps\n";
  for (const auto& s : log.samples()) {
    for (const auto& ue : s.throughput) {
      out << fmt::format("{},{:.6f},{},{:.6f}\n", s.time.ms, s.coverage_ratio, ue.ue_id, ue.mbps);
    }
  }
}

void write_actions_log(std::ostream& out, const MetricsLog& log) {
  for (const auto& a : log.actions()) {
    out << fmt::format("{}\t{}\t{}\n", a.time.ms, to_string(a.category), a.description);
  }
}

}  // namespace rrs::sim
