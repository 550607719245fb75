#include "rrs/ric/action.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace rrs::ric {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join_ids(const std::vector<scenario::NodeId>& ids) {
  return fmt::format("[{}]", fmt::join(ids, ","));
}

}  // namespace

std::string_view to_string(Tier tier) { return tier == Tier::NonRT ? "NonRT" : "NearRT"; }

std::string_view action_name(const ActionKind& kind) {
  return std::visit(Overloaded{
                        [](const DeployPlan&) { return std::string_view("DeployPlan"); },
                        [](const ApplyRisConfig&) { return std::string_view("ApplyRisConfig"); },
                        [](const Recluster&) { return std::string_view("Recluster"); },
                        [](const SwitchPolicy&) { return std::string_view("SwitchPolicy"); },
                        [](const ReportOutage&) { return std::string_view("ReportOutage"); },
                        [](const Note&) { return std::string_view("Note"); },
                    },
                    kind);
}

std::string describe(const Action& action) {
  const std::string body = std::visit(
      Overloaded{
          [](const DeployPlan& a) {
            std::vector<scenario::NodeId> ids;
            for (const auto& p : a.plan.placements) ids.push_back(p.id);
            std::size_t relays = 0;
            for (const auto& e : a.plan.backhaul) relays += e.relay ? 1 : 0;
            return fmt::format("nodes={} restored={} backhaul_edges={} ris_relays={} est_coverage={:.4f}",
                               join_ids(ids), a.plan.restored, a.plan.backhaul.size(), relays,
                               a.plan.estimated_coverage_ratio);
          },
          [](const ApplyRisConfig& a) {
            return fmt::format("panel={} part={} method={} states={}", a.panel, a.part, a.method,
                               fmt::join(a.config.states, ""));
          },
          [](const Recluster& a) { return fmt::format("L={}", a.cluster_size); },
          [](const SwitchPolicy& a) { return fmt::format("policy={}", a.policy); },
          [](const ReportOutage& a) {
            return fmt::format("failed={} out_of_service={}", join_ids(a.report.failed),
                               a.report.out_of_service.size());
          },
          [](const Note& a) { return a.text; },
      },
      action.kind);
  return fmt::format("{} {} {}", action.cause, action_name(action.kind), body);
}

bool tier_allows(Tier tier, const ActionKind& kind) {
  if (std::holds_alternative<DeployPlan>(kind)) return tier == Tier::NonRT;
  if (std::holds_alternative<ApplyRisConfig>(kind)) return tier == Tier::NearRT;
  return true;
}

bool known_policy(std::string_view name) {
  return name == kPolicyFastRecovery || name == kPolicyMaxThroughput;
}

}  // namespace rrs::ric
