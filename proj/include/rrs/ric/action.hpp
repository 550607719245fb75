#pragma once

#include <string>
#include <variant>

#include "rrs/ntn/plan.hpp"
#include "rrs/ris/optimizers.hpp"

namespace rrs::ric {

enum class Tier { NonRT, NearRT };

std::string_view to_string(Tier tier);

struct DeployPlan {
  ntn::DeploymentPlan plan;
};
struct ApplyRisConfig {
  scenario::NodeId panel = 0;
  std::size_t part = 0;
  channel::RisConfig config;  // part-restricted
  std::string method;         // "codebook", "iterative", ...
};
struct Recluster {
  std::size_t cluster_size = 1;
};
struct SwitchPolicy {
  std::string policy;
};
// Publishes a detection result for other apps to read at their next tick.
struct ReportOutage {
  ntn::OutageReport report;
};
struct Note {
  std::string text;
};

using ActionKind =
    std::variant<DeployPlan, ApplyRisConfig, Recluster, SwitchPolicy, ReportOutage, Note>;

struct Action {
  ActionKind kind;
  sim::SimTime issued;
  std::string cause;  // issuing app
};

std::string_view action_name(const ActionKind& kind);
std::string describe(const Action& action);

// Inventory changes belong to NonRT apps, per-element RIS states to NearRT apps.
bool tier_allows(Tier tier, const ActionKind& kind);

inline constexpr std::string_view kPolicyFastRecovery = "fast-recovery";
inline constexpr std::string_view kPolicyMaxThroughput = "max-throughput";
bool known_policy(std::string_view name);

}  // namespace rrs::ric
