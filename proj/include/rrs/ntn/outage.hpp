#pragma once

#include <vector>

#include "rrs/ntn/topology.hpp"

namespace rrs::ntn {

struct OutageReport {
  sim::SimTime at;
  std::vector<NodeId> operational;
  std::vector<NodeId> failed;  // infrastructure that is not operational
  std::vector<NodeId> out_of_service;

  friend bool operator==(const OutageReport&, const OutageReport&) = default;
};

// Best direct-path SNR from any operational access node, -inf when none.
double best_access_snr_db(const Topology& topology, const channel::RadioEnvironment& env,
                          Vec3 ue_position);

OutageReport detect_outage(const Topology& topology, double snr_threshold_db);

}  // namespace rrs::ntn
