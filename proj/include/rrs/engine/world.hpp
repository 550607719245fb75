#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rrs/cfmimo/cfmimo.hpp"
#include "rrs/ntn/outage.hpp"
#include "rrs/ric/ric.hpp"
#include "rrs/scenario/scenario.hpp"
#include "rrs/simcore/metrics.hpp"
#include "rrs/simcore/rng.hpp"

namespace rrs::engine {

using scenario::Node;
using scenario::NodeId;

struct PanelRuntime {
  scenario::RisPanelSpec spec;
  channel::RisPanel panel;
  channel::RisConfig config;
  std::map<std::size_t, std::shared_ptr<const ris::Codebook>> codebooks;
};

struct PendingNode {
  NodeId id = 0;
  sim::SimTime ready_at;
  std::vector<NodeId> covers;
};

// Codebooks declared on a panel spec, built against the scenario's static
// geometry with the other parts at state 0.
std::map<std::size_t, std::shared_ptr<const ris::Codebook>> build_panel_codebooks(
    const scenario::Scenario& s, const scenario::RisPanelSpec& spec, const channel::RisPanel& panel);

// Mutable network state driven by scenario events and controller actions.
class World {
 public:
  explicit World(scenario::Scenario scenario);

  const scenario::Scenario& scenario() const { return scenario_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node* find_node(NodeId id) const;
  const std::vector<Box>& obstacles() const { return obstacles_; }
  const std::vector<PanelRuntime>& panels() const { return panels_; }
  const std::string& policy() const { return policy_; }
  const std::vector<PendingNode>& pending() const { return pending_; }
  std::size_t deployed_nodes() const { return deployed_; }
  std::size_t cluster_size() const { return cluster_size_; }
  std::optional<sim::SimTime> strike_time() const { return strike_; }
  std::uint64_t inventory_version() const { return inventory_version_; }
  // Per UE (node order), ids of its serving APs.
  const std::vector<std::vector<NodeId>>& clusters() const { return serving_; }

  // Scenario events. Each returns a one-line description for the action log.
  std::string apply_disaster(std::size_t index, sim::SimTime now);
  std::optional<std::string> expire_battery(NodeId id);
  void heartbeat_sweep(sim::SimTime now);
  std::optional<std::string> activate(NodeId id, sim::SimTime now);
  void move_ue(NodeId id, Vec3 position);

  // Controller actions; throw Error on inconsistent requests.
  std::vector<PendingNode> deploy(const ntn::DeploymentPlan& plan, sim::SimTime now);
  void apply_ris_config(NodeId panel, std::size_t part, const channel::RisConfig& part_config);
  void recluster(std::size_t cluster_size);
  void set_policy(const std::string& policy);
  void set_outage(ntn::OutageReport report) { last_outage_ = std::move(report); }

  channel::RadioEnvironment environment() const;
  ric::Snapshot snapshot(sim::SimTime now) const;

  // Fraction of UEs whose best SNR over live access nodes (RIS included)
  // reaches the planner threshold.
  double coverage_ratio();
  std::vector<sim::UeThroughput> throughput(sim::SimTime now);
  std::size_t active_nodes() const;
  sim::Sample sample(sim::SimTime now);

 private:
  struct Radio {
    std::vector<std::size_t> aps;   // node indices of access nodes
    std::vector<std::size_t> ues;   // node indices of UEs
    std::vector<std::complex<double>> gain;  // AP-major
    std::vector<double> snr_db;              // AP-major, -inf for dead APs
  };
  const Radio& radio();
  Node& node_ref(NodeId id);
  void touch_radio() { ++radio_version_; }
  void touch_inventory() {
    ++inventory_version_;
    ++radio_version_;
  }

  scenario::Scenario scenario_;
  std::vector<Node> nodes_;
  std::vector<Box> obstacles_;
  std::map<NodeId, sim::SimTime> last_heartbeat_;
  std::vector<PanelRuntime> panels_;
  std::string policy_;
  std::optional<ntn::OutageReport> last_outage_;
  std::vector<PendingNode> pending_;
  std::size_t deployed_ = 0;
  std::size_t cluster_size_ = 1;
  std::optional<sim::SimTime> strike_;
  std::vector<std::vector<NodeId>> serving_;

  std::uint64_t radio_version_ = 1;
  std::uint64_t inventory_version_ = 1;
  std::uint64_t cluster_version_ = 1;

  std::optional<Radio> radio_;
  std::uint64_t radio_cached_at_ = 0;
  std::optional<double> coverage_;
  std::uint64_t coverage_cached_at_ = 0;
  std::vector<double> sinr_;
  std::pair<std::uint64_t, std::uint64_t> sinr_cached_at_{0, 0};
  sim::RngStream fading_rng_;
};

}  // namespace rrs::engine
