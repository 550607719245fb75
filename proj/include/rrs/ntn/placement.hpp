#pragma once

#include <cstdint>
#include <vector>

#include "rrs/ntn/topology.hpp"

namespace rrs::ntn {

// covers[c] lists the UE indices candidate c serves.
using CoverageSets = std::vector<std::vector<std::size_t>>;

struct MaxCoverageResult {
  std::vector<std::size_t> chosen;  // candidate indices in pick order
  std::size_t covered = 0;
};

// Picks the candidate covering the most still-uncovered UEs until `budget`
// picks, full coverage, or no candidate adds anything; ties go to the lowest
// candidate index.
MaxCoverageResult greedy_max_coverage(const CoverageSets& covers, std::size_t ue_count,
                                      std::size_t budget);
// Best subset of at most `budget` candidates by enumeration; small instances only
// (throws TooLarge beyond 2^20 subsets).
MaxCoverageResult exact_max_coverage(const CoverageSets& covers, std::size_t ue_count,
                                     std::size_t budget);

// Lattice at `spacing_m` over the area's x/y extent, at a fixed altitude.
std::vector<Vec3> candidate_lattice(const Box& area, double spacing_m, double altitude_m);
// Planner area: configured, else the bounding box of all nodes.
Box planning_area(const Topology& topology);

struct Placement {
  NodeId id = 0;
  NodeKind kind = NodeKind::UAV;
  Vec3 position;
  double tx_power_dbm = 0.0;
  double freq_ghz = 3.5;
  std::vector<NodeId> covers;  // out-of-service UEs reaching threshold
  std::size_t candidate = 0;   // index into the candidate list

  Node as_node(NodeStatus status) const;
  friend bool operator==(const Placement&, const Placement&) = default;
};

// Greedy aerial placement over `candidates` for the listed UEs. Ids are
// assigned from topology.next_id() upwards in pick order.
std::vector<Placement> place_ntn(const Topology& topology, const std::vector<NodeId>& out_of_service,
                                 const std::vector<Vec3>& candidates, std::size_t max_nodes,
                                 double snr_threshold_db);

CoverageSets candidate_coverage(const Topology& topology, const std::vector<NodeId>& ues,
                                const std::vector<Vec3>& candidates, double snr_threshold_db);

}  // namespace rrs::ntn
