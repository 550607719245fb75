#pragma once

#include <optional>
#include <vector>

#include "rrs/ntn/placement.hpp"

namespace rrs::ntn {

struct RelayPanel {
  Vec3 position;
  Vec3 normal;
  channel::RisConfig config;

  friend bool operator==(const RelayPanel&, const RelayPanel&) = default;
};

struct BackhaulEdge {
  NodeId child = 0;
  NodeId parent = 0;
  std::optional<RelayPanel> relay;  // empty: direct link
  double snr_db = 0.0;
  double cost_db = 0.0;

  friend bool operator==(const BackhaulEdge&, const BackhaulEdge&) = default;
};

struct LinkBudget {
  bool feasible = false;
  double snr_db = 0.0;
  double cost_db = 0.0;
  std::optional<RelayPanel> relay;
};

// Direct mmWave link between two ground/aerial nodes, RIS relay attempted when
// only blockage makes it infeasible.
LinkBudget backhaul_link(const Topology& topology, Vec3 a, Vec3 b);
// Cascaded SNR through a relay panel at `site`, configured by one iterative pass.
std::optional<RelayPanel> build_relay(const Topology& topology, Vec3 a, Vec3 b, Vec3 site,
                                      double* snr_db);
std::vector<Vec3> relay_candidates(const Topology& topology, Vec3 a, Vec3 b);

struct BackhaulForest {
  std::vector<BackhaulEdge> edges;
  std::vector<NodeId> unreachable;  // placements with no feasible path
};

// Shortest-path forest (cost = path loss dB) from every placement to the
// nearest root: live Gateways over mmWave, Satellites at a fixed cost. Live
// terrestrial BSs and other placements may relay. Edges are listed child
// first along each path, without duplicates.
// Throws UnreachablePlacement naming the first unreachable placement.
std::vector<BackhaulEdge> form_backhaul(const std::vector<Placement>& placements,
                                        const Topology& topology);
// Same search, reporting unreachable placements instead of throwing.
BackhaulForest solve_backhaul(const std::vector<Placement>& placements, const Topology& topology);

}  // namespace rrs::ntn
