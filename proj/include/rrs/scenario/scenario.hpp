#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrs/channel/radio_environment.hpp"
#include "rrs/channel/ris_panel.hpp"
#include "rrs/common/geometry.hpp"
#include "rrs/common/json_util.hpp"
#include "rrs/scenario/node.hpp"
#include "rrs/scenario/traffic.hpp"
#include "rrs/simcore/event.hpp"

namespace rrs::scenario {

struct DisasterEvent {
  sim::SimTime strike;
  std::vector<NodeId> failed;      // destroyed instantly
  std::vector<NodeId> power_loss;  // switched to battery
  std::vector<Box> blockers;       // new line-of-sight obstacles

  friend bool operator==(const DisasterEvent&, const DisasterEvent&) = default;
};

struct Ticks {
  sim::SimTime nonrt{60'000};
  sim::SimTime nearrt{100};
  sim::SimTime sample{1'000};
  sim::SimTime heartbeat{10'000};

  friend bool operator==(const Ticks&, const Ticks&) = default;
};

inline constexpr sim::SimTime kDefaultBatteryReserve{14'400'000};  // 4 h

struct PartCodebookSpec {
  std::size_t part = 0;
  NodeId tx = 0;
  double radius_m = 1.7;
  std::vector<double> angles_deg;

  friend bool operator==(const PartCodebookSpec&, const PartCodebookSpec&) = default;
};

// Geometry and control layout of a RisPanel node.
struct RisPanelSpec {
  NodeId node = 0;
  std::size_t rows = 1;
  std::size_t cols = 1;
  double pitch_m = 0.028;
  Vec3 column_axis{0.0, 1.0, 0.0};
  Vec3 row_axis{0.0, 0.0, 1.0};
  std::vector<channel::RisState> states = channel::polarization_phase_states();
  std::vector<std::vector<std::size_t>> parts;  // empty: one part covering the panel
  std::map<std::size_t, NodeId> part_ue;        // part -> served UE
  std::vector<PartCodebookSpec> codebooks;

  Vec3 normal() const { return normalized(cross(column_axis, row_axis)); }
  channel::RisPanel build(Vec3 center) const;
};

struct CfmimoParams {
  std::size_t cluster_size = 4;
  std::size_t realizations = 50;
  std::optional<double> noise_dbm;  // default: channel noise floor
  bool redraw_each_sample = false;

  friend bool operator==(const CfmimoParams&, const CfmimoParams&) = default;
};

struct BackhaulParams {
  double freq_ghz = 28.0;
  double tx_power_dbm = 30.0;
  double antenna_gain_db = 50.0;  // both ends combined
  double bandwidth_hz = 400e6;
  double noise_figure_db = 7.0;
  double snr_threshold_db = 10.0;
  double exponent = 2.0;
  double blockage_penalty_db = 40.0;
  std::size_t relay_rows = 16;
  std::size_t relay_cols = 16;
  double relay_element_gain_db = 10.0;

  friend bool operator==(const BackhaulParams&, const BackhaulParams&) = default;
};

struct PlannerParams {
  double snr_threshold_db = 0.0;
  double uav_altitude_m = 120.0;
  double lattice_spacing_m = 250.0;
  std::size_t max_nodes = 6;
  double uav_tx_power_dbm = 30.0;
  double uav_freq_ghz = 3.5;
  sim::SimTime deploy_time{120'000};
  double satellite_snr_db = 5.0;
  double satellite_cost_db = 200.0;
  double relay_corner_offset_m = 2.0;
  std::vector<Vec3> ris_relay_sites;
  std::optional<Box> area;  // candidate lattice extent; default = node bounding box
  BackhaulParams backhaul;

  friend bool operator==(const PlannerParams&, const PlannerParams&) = default;
};

struct PolicyChange {
  sim::SimTime at;
  std::string policy;

  friend bool operator==(const PolicyChange&, const PolicyChange&) = default;
};

struct RicParams {
  std::vector<std::string> apps;  // empty: built-in set
  std::vector<std::string> disabled;
  std::string policy = "fast-recovery";
  std::vector<PolicyChange> schedule;
  std::map<std::string, sim::SimTime> intervals;

  friend bool operator==(const RicParams&, const RicParams&) = default;
};

struct RecoveryParams {
  double target_fraction = 0.95;
  sim::SimTime hold{10'000};

  friend bool operator==(const RecoveryParams&, const RecoveryParams&) = default;
};

struct Waypoint {
  sim::SimTime at;
  Vec3 position;

  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

struct Trajectory {
  NodeId ue = 0;
  std::vector<Waypoint> waypoints;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

struct Scenario {
  std::string name = "unnamed";
  std::uint64_t seed = 1;
  Ticks ticks;
  sim::SimTime battery_reserve = kDefaultBatteryReserve;
  channel::ChannelParams channel;
  CfmimoParams cfmimo;
  PlannerParams planner;
  RicParams ric;
  RecoveryParams recovery;
  TrafficProfile traffic;
  std::vector<Node> nodes;
  std::vector<Box> obstacles;
  std::vector<DisasterEvent> disasters;
  std::vector<RisPanelSpec> panels;
  std::vector<Trajectory> trajectories;

  // Throws ValidationError naming the violated invariant (UnknownNode for
  // dangling references).
  void validate() const;

  const Node& node(NodeId id) const;
  const Node* find_node(NodeId id) const;
  const RisPanelSpec* find_panel(NodeId id) const;
};

// Events realising a disaster: the strike itself plus one BatteryExpiry per
// power-loss node at strike + battery_reserve.
std::vector<sim::Event> inject_disaster(const Scenario& scenario, std::size_t disaster_index);
std::vector<sim::Event> inject_disaster(const Scenario& scenario, const DisasterEvent& event,
                                        std::size_t disaster_index = 0);

Scenario load_scenario(const std::filesystem::path& path);
// `source` names the origin in error messages.
Scenario scenario_from_json_text(const std::string& text, const std::string& source = "<memory>");
Scenario scenario_from_json(const Json& doc);
Json to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace rrs::scenario
