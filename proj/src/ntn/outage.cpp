#include "rrs/ntn/outage.hpp"

#include <algorithm>
#include <limits>

namespace rrs::ntn {

double best_access_snr_db(const Topology& topology, const channel::RadioEnvironment& env,
                          Vec3 ue_position) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& n : topology.nodes) {
    if (!n.is_access() || !topology.operational(n)) continue;
    best = std::max(best, access_snr_db(env, n, ue_position));
  }
  return best;
}

OutageReport detect_outage(const Topology& topology, double snr_threshold_db) {
  OutageReport r;
  r.at = topology.now;
  const auto env = topology.environment();
  for (const auto& n : topology.nodes) {
    if (n.kind == NodeKind::UE) {
      if (!(best_access_snr_db(topology, env, n.position) >= snr_threshold_db)) {
        r.out_of_service.push_back(n.id);
      }
    } else if (topology.operational(n)) {
      r.operational.push_back(n.id);
    } else if (n.status != NodeStatus::Deploying) {
      r.failed.push_back(n.id);
    }
  }
  return r;
}

}  // namespace rrs::ntn
