#include "rrs/engine/run_summary.hpp"

#include <algorithm>
#include <sstream>

#include "rrs/common/atomic_file.hpp"

namespace rrs::engine {

double baseline_coverage(const sim::MetricsLog& log) {
  const auto& samples = log.samples();
  if (samples.empty()) return 0.0;
  const auto strike = log.first_strike();
  double baseline = samples.front().coverage_ratio;
  for (const auto& s : samples) {
    if (strike && s.time >= *strike) break;
    baseline = s.coverage_ratio;
  }
  return baseline;
}

std::optional<std::string> ris_method(std::string_view description) {
  if (description.find(" ApplyRisConfig ") == std::string_view::npos) return std::nullopt;
  const auto at = description.find("method=");
  if (at == std::string_view::npos) return std::nullopt;
  auto rest = description.substr(at + 7);
  const auto end = rest.find_first_of(" #(");
  return std::string(rest.substr(0, end));
}

RunSummary summarize(const sim::MetricsLog& log, const scenario::Scenario& scenario,
                     std::string scenario_path, sim::SimTime until) {
  RunSummary out;
  out.scenario = std::move(scenario_path);
  out.seed = scenario.seed;
  out.until = until;
  const auto& samples = log.samples();
  if (!samples.empty()) {
    out.initial_coverage = samples.front().coverage_ratio;
    out.final_coverage = samples.back().coverage_ratio;
  }
  if (const auto strike = log.first_strike()) {
    RecoverySection r;
    r.strike = *strike;
    r.baseline = baseline_coverage(log);
    r.target_fraction = scenario.recovery.target_fraction;
    r.hold = scenario.recovery.hold;
    r.min_coverage = r.baseline;
    for (const auto& s : samples) {
      if (s.time >= *strike) r.min_coverage = std::min(r.min_coverage, s.coverage_ratio);
    }
    if (r.baseline > 0.0) r.recovery_time = sim::recovery_time(log, r.baseline, r.target_fraction, r.hold);
    out.recovery = r;
  }
  for (const auto& a : log.actions()) {
    switch (a.category) {
      case sim::ActionCategory::Controller:
        if (auto m = ris_method(a.description)) ++out.ris_actions[*m];
        if (a.description.find(" DeployPlan ") != std::string::npos) ++out.deploy_actions;
        break;
      case sim::ActionCategory::NodeActivated: ++out.nodes_activated; break;
      case sim::ActionCategory::AppError: ++out.app_errors; break;
      default: break;
    }
  }
  out.actions = log.actions();
  return out;
}

Json to_json(const RunSummary& s) {
  Json j;
  j["scenario"] = s.scenario;
  j["seed"] = s.seed;
  j["until_ms"] = s.until.ms;
  j["initial_coverage"] = s.initial_coverage;
  j["final_coverage"] = s.final_coverage;
  if (s.recovery) {
    const auto& r = *s.recovery;
    Json rj;
    rj["strike_ms"] = r.strike.ms;
    if (r.recovery_time) {
      j["recovery_time_ms"] = r.recovery_time->ms;
    } else {
      j["recovery_time_ms"] = "not_recovered";
    }
    rj["baseline_coverage"] = r.baseline;
    rj["min_coverage"] = r.min_coverage;
    rj["target_fraction"] = r.target_fraction;
    rj["hold_ms"] = r.hold.ms;
    j["recovery"] = rj;
  }
  j["ris_actions"] = s.ris_actions;
  j["deploy_actions"] = s.deploy_actions;
  j["nodes_activated"] = s.nodes_activated;
  j["app_errors"] = s.app_errors;
  j["outputs"] = s.outputs;
  Json actions = Json::array();
  for (const auto& a : s.actions) {
    actions.push_back({{"time_ms", a.time.ms}, {"category", sim::to_string(a.category)}, {"description", a.description}});
  }
  j["actions"] = actions;
  return j;
}

RunSummary write_run_outputs(const std::filesystem::path& dir, const sim::MetricsLog& log,
                             RunSummary summary) {
  summary.outputs = {(dir / "metrics.csv").string(), (dir / "actions.log").string(),
                     (dir / "summary.json").string()};
  std::ostringstream csv;
  sim::write_metrics_csv(csv, log);
  std::ostringstream actions;
  sim::write_actions_log(actions, log);
  write_file_atomic(dir / "metrics.csv", csv.str());
  write_file_atomic(dir / "actions.log", actions.str());
  write_file_atomic(dir / "summary.json", to_json(summary).dump(2) + "\n");
  return summary;
}

}  // namespace rrs::engine
