#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrs/common/json_util.hpp"
#include "rrs/scenario/scenario.hpp"
#include "rrs/simcore/metrics.hpp"

namespace rrs::engine {

struct RecoverySection {
  std::optional<sim::SimTime> recovery_time;  // nullopt: not recovered
  sim::SimTime strike;
  double baseline = 0.0;
  double min_coverage = 0.0;  // lowest sampled coverage from the strike on
  double target_fraction = 0.0;
  sim::SimTime hold;
};

struct RunSummary {
  std::string scenario;
  std::uint64_t seed = 0;
  sim::SimTime until;
  double initial_coverage = 0.0;
  double final_coverage = 0.0;
  std::optional<RecoverySection> recovery;  // only once a strike has happened
  std::map<std::string, std::size_t> ris_actions;  // method -> ApplyRisConfig count
  std::size_t deploy_actions = 0;
  std::size_t nodes_activated = 0;
  std::size_t app_errors = 0;
  std::vector<std::string> outputs;
  std::vector<sim::ActionRecord> actions;
};

// Everything is read back from the log, so the summary cannot drift from it.
RunSummary summarize(const sim::MetricsLog& log, const scenario::Scenario& scenario,
                     std::string scenario_path, sim::SimTime until);

// Baseline coverage: the last sample before the first strike, else the first sample.
double baseline_coverage(const sim::MetricsLog& log);

// "method=<m>" in an ApplyRisConfig description without its "#n" or "(...)" suffix.
std::optional<std::string> ris_method(std::string_view description);

Json to_json(const RunSummary& summary);

// metrics.csv, actions.log and summary.json into `dir`, each written atomically.
// Returns the summary with `outputs` filled in.
RunSummary write_run_outputs(const std::filesystem::path& dir, const sim::MetricsLog& log,
                             RunSummary summary);

}  // namespace rrs::engine
