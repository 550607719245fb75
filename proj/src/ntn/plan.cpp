#include "rrs/ntn/plan.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::ntn {

namespace {

bool contains(const std::vector<NodeId>& v, NodeId id) {
  return std::find(v.begin(), v.end(), id) != v.end();
}

}  // namespace

DeploymentPlan plan_deployment(const Topology& topology, const PlanRequest& request) {
  const double threshold = topology.planner.snr_threshold_db;
  const auto report = detect_outage(topology, threshold);

  DeploymentPlan plan;
  for (const auto& n : topology.nodes) {
    if (n.kind == NodeKind::UE) ++plan.ue_count;
  }
  plan.covered_before = plan.ue_count - report.out_of_service.size();
  for (auto id : report.out_of_service) {
    if (!contains(request.exclude_ues, id)) plan.out_of_service.push_back(id);
  }

  const auto lattice = candidate_lattice(planning_area(topology),
                                         topology.planner.lattice_spacing_m,
                                         topology.planner.uav_altitude_m);
  std::vector<bool> banned(lattice.size(), false);
  for (auto c : request.banned_candidates) {
    if (c < banned.size()) banned[c] = true;
  }

  for (;;) {
    std::vector<Vec3> candidates;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (banned[i]) continue;
      candidates.push_back(lattice[i]);
      index.push_back(i);
    }
    plan.placements.clear();
    if (!candidates.empty()) {
      plan.placements = place_ntn(topology, plan.out_of_service, candidates, request.max_nodes,
                                  threshold);
    }
    for (auto& p : plan.placements) p.candidate = index[p.candidate];

    auto forest = solve_backhaul(plan.placements, topology);
    if (forest.unreachable.empty()) {
      plan.backhaul = std::move(forest.edges);
      break;
    }
    if (!request.replace_unreachable) {
      throw Error(ErrorCode::UnreachablePlacement,
                  fmt::format("node {} has no feasible backhaul path", forest.unreachable.front()));
    }
    for (const auto& p : plan.placements) {
      if (contains(forest.unreachable, p.id)) banned[p.candidate] = true;
    }
  }

  std::vector<NodeId> restored;
  for (const auto& p : plan.placements) {
    for (auto id : p.covers) {
      if (!contains(restored, id)) restored.push_back(id);
    }
  }
  plan.restored = restored.size();
  plan.estimated_coverage_ratio =
      plan.ue_count == 0 ? 1.0
                         : static_cast<double>(plan.covered_before + plan.restored) /
                               static_cast<double>(plan.ue_count);
  return plan;
}

double plan_coverage_ratio(const Topology& topology, const DeploymentPlan& plan) {
  Topology after = topology;
  for (const auto& p : plan.placements) {
    after.nodes.push_back(p.as_node(NodeStatus::Active));
    after.last_heartbeat[p.id] = after.now;
  }
  const auto report = detect_outage(after, after.planner.snr_threshold_db);
  std::size_t ues = 0;
  for (const auto& n : after.nodes) {
    if (n.kind == NodeKind::UE) ++ues;
  }
  if (ues == 0) return 1.0;
  return static_cast<double>(ues - report.out_of_service.size()) / static_cast<double>(ues);
}

Json to_json(const DeploymentPlan& plan) {
  Json placements = Json::array();
  for (const auto& p : plan.placements) {
    placements.push_back({{"id", p.id},
                          {"kind", std::string(scenario::to_string(p.kind))},
                          {"position", vec3_to_json(p.position)},
                          {"tx_power_dbm", p.tx_power_dbm},
                          {"freq_ghz", p.freq_ghz},
                          {"candidate", p.candidate},
                          {"covers", p.covers}});
  }
  Json edges = Json::array();
  for (const auto& e : plan.backhaul) {
    Json j = {{"child", e.child},
              {"parent", e.parent},
              {"via", e.relay ? "ris_relay" : "direct"},
              {"snr_db", e.snr_db},
              {"cost_db", e.cost_db}};
    if (e.relay) {
      j["relay"] = {{"position", vec3_to_json(e.relay->position)},
                    {"normal", vec3_to_json(e.relay->normal)},
                    {"states", e.relay->config.states}};
    }
    edges.push_back(std::move(j));
  }
  return {{"placements", placements},
          {"backhaul", edges},
          {"out_of_service", plan.out_of_service},
          {"ue_count", plan.ue_count},
          {"covered_before", plan.covered_before},
          {"restored", plan.restored},
          {"estimated_coverage_ratio", plan.estimated_coverage_ratio}};
}

std::string format_plan(const DeploymentPlan& plan) {
  std::string s;
  s += fmt::format("out-of-service UEs: {} of {}\n", plan.out_of_service.size(), plan.ue_count);
  if (plan.placements.empty()) {
    s += "no placements\n";
  } else {
    s += fmt::format("{:>6}  {:<5}  {:>10}  {:>10}  {:>7}  {:>6}\n", "id", "kind", "x_m", "y_m",
                     "alt_m", "covers");
    for (const auto& p : plan.placements) {
      s += fmt::format("{:>6}  {:<5}  {:>10.1f}  {:>10.1f}  {:>7.1f}  {:>6}\n", p.id,
                       scenario::to_string(p.kind), p.position.x, p.position.y, p.position.z,
                       p.covers.size());
    }
    s += "backhaul:\n";
    for (const auto& e : plan.backhaul) {
      s += fmt::format("  {} -> {}  {}  snr {:.1f} dB\n", e.child, e.parent,
                       e.relay ? "ris_relay" : "direct", e.snr_db);
    }
  }
  s += fmt::format("restored UEs: {}  estimated coverage ratio: {:.4f}\n", plan.restored,
                   plan.estimated_coverage_ratio);
  return s;
}

}  // namespace rrs::ntn
