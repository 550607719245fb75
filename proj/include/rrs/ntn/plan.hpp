#pragma once

#include <vector>

#include "rrs/common/json_util.hpp"
#include "rrs/ntn/backhaul.hpp"
#include "rrs/ntn/outage.hpp"

namespace rrs::ntn {

struct DeploymentPlan {
  std::vector<Placement> placements;
  std::vector<BackhaulEdge> backhaul;
  std::vector<NodeId> out_of_service;
  std::size_t ue_count = 0;
  std::size_t covered_before = 0;
  std::size_t restored = 0;  // out-of-service UEs the placements cover
  // Fraction of all UEs covered once every placement is active.
  double estimated_coverage_ratio = 0.0;

  bool empty() const { return placements.empty(); }
  friend bool operator==(const DeploymentPlan&, const DeploymentPlan&) = default;
};

struct PlanRequest {
  std::size_t max_nodes = 0;
  // UEs already being handled (e.g. by nodes still deploying).
  std::vector<NodeId> exclude_ues;
  // Candidate indices to leave out, used when retrying after an unreachable pick.
  std::vector<std::size_t> banned_candidates;
  // Drop candidates whose node cannot reach a root and place again instead of
  // throwing.
  bool replace_unreachable = false;
};

// detect_outage -> place_ntn -> form_backhaul on one snapshot. Throws
// UnreachablePlacement unless request.replace_unreachable is set.
DeploymentPlan plan_deployment(const Topology& topology, const PlanRequest& request);

// Coverage ratio the topology gives with the plan's nodes switched on.
double plan_coverage_ratio(const Topology& topology, const DeploymentPlan& plan);

Json to_json(const DeploymentPlan& plan);
// Human-readable table.
std::string format_plan(const DeploymentPlan& plan);

}  // namespace rrs::ntn
