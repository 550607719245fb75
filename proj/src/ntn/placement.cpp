#include "rrs/ntn/placement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::ntn {

MaxCoverageResult greedy_max_coverage(const CoverageSets& covers, std::size_t ue_count,
                                      std::size_t budget) {
  MaxCoverageResult r;
  std::vector<bool> covered(ue_count, false);
  std::vector<bool> used(covers.size(), false);
  while (r.chosen.size() < budget && r.covered < ue_count) {
    std::size_t best = covers.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (used[c]) continue;
      std::size_t gain = 0;
      for (auto u : covers[c]) gain += covered[u] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == covers.size()) break;
    used[best] = true;
    r.chosen.push_back(best);
    for (auto u : covers[best]) {
      if (!covered[u]) {
        covered[u] = true;
        ++r.covered;
      }
    }
  }
  return r;
}

MaxCoverageResult exact_max_coverage(const CoverageSets& covers, std::size_t ue_count,
                                     std::size_t budget) {
  const std::size_t n = covers.size();
  if (n >= 20) throw Error(ErrorCode::TooLarge, fmt::format("{} candidates for enumeration", n));
  MaxCoverageResult best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > budget) continue;
    std::vector<bool> covered(ue_count, false);
    std::size_t count = 0;
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1u)) continue;
      chosen.push_back(c);
      for (auto u : covers[c]) {
        if (!covered[u]) {
          covered[u] = true;
          ++count;
        }
      }
    }
    if (count > best.covered) best = {std::move(chosen), count};
  }
  return best;
}

std::vector<Vec3> candidate_lattice(const Box& area, double spacing_m, double altitude_m) {
  if (!(spacing_m > 0.0)) throw Error(ErrorCode::ValidationError, "lattice spacing must be > 0");
  std::vector<Vec3> out;
  const auto nx = static_cast<std::size_t>(std::floor((area.max.x - area.min.x) / spacing_m)) + 1;
  const auto ny = static_cast<std::size_t>(std::floor((area.max.y - area.min.y) / spacing_m)) + 1;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      out.push_back({area.min.x + static_cast<double>(ix) * spacing_m,
                     area.min.y + static_cast<double>(iy) * spacing_m, altitude_m});
    }
  }
  return out;
}

Box planning_area(const Topology& topology) {
  if (topology.planner.area) return *topology.planner.area;
  Box b{};
  bool first = true;
  for (const auto& n : topology.nodes) {
    if (n.kind == NodeKind::Satellite) continue;
    if (first) {
      b = {n.position, n.position};
      first = false;
      continue;
    }
    b.min = {std::min(b.min.x, n.position.x), std::min(b.min.y, n.position.y),
             std::min(b.min.z, n.position.z)};
    b.max = {std::max(b.max.x, n.position.x), std::max(b.max.y, n.position.y),
             std::max(b.max.z, n.position.z)};
  }
  return b;
}

Node Placement::as_node(NodeStatus status) const {
  Node n;
  n.id = id;
  n.kind = kind;
  n.position = position;
  n.status = status;
  n.tx_power_dbm = tx_power_dbm;
  n.freq_ghz = freq_ghz;
  return n;
}

CoverageSets candidate_coverage(const Topology& topology, const std::vector<NodeId>& ues,
                                const std::vector<Vec3>& candidates, double snr_threshold_db) {
  const auto env = topology.environment();
  CoverageSets covers(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Placement p;
    p.position = candidates[c];
    p.tx_power_dbm = topology.planner.uav_tx_power_dbm;
    p.freq_ghz = topology.planner.uav_freq_ghz;
    const Node probe = p.as_node(NodeStatus::Active);
    for (std::size_t u = 0; u < ues.size(); ++u) {
      const Node* ue = topology.find(ues[u]);
      if (!ue) throw Error(ErrorCode::UnknownNode, fmt::format("UE {} not in topology", ues[u]));
      if (access_snr_db(env, probe, ue->position) >= snr_threshold_db) covers[c].push_back(u);
    }
  }
  return covers;
}

std::vector<Placement> place_ntn(const Topology& topology, const std::vector<NodeId>& out_of_service,
                                 const std::vector<Vec3>& candidates, std::size_t max_nodes,
                                 double snr_threshold_db) {
  if (out_of_service.empty() || max_nodes == 0) return {};
  if (candidates.empty()) {
    throw Error(ErrorCode::ValidationError, "no candidate positions for out-of-service UEs");
  }
  const auto covers = candidate_coverage(topology, out_of_service, candidates, snr_threshold_db);
  const auto picked = greedy_max_coverage(covers, out_of_service.size(), max_nodes);
  std::vector<Placement> out;
  NodeId next = topology.next_id();
  for (auto c : picked.chosen) {
    Placement p;
    p.id = next++;
    p.kind = NodeKind::UAV;
    p.position = candidates[c];
    p.tx_power_dbm = topology.planner.uav_tx_power_dbm;
    p.freq_ghz = topology.planner.uav_freq_ghz;
    p.candidate = c;
    for (auto u : covers[c]) p.covers.push_back(out_of_service[u]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rrs::ntn
