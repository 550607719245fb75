#include "rrs/ntn/backhaul.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>

#include "rrs/channel/cascade.hpp"
#include "rrs/common/error.hpp"
#include "rrs/ris/optimizers.hpp"

namespace rrs::ntn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

channel::PathLossModel backhaul_path_loss(const scenario::BackhaulParams& b) {
  return {b.exponent, 1.0, b.blockage_penalty_db};
}

double backhaul_noise_dbm(const scenario::BackhaulParams& b) {
  return channel::noise_floor_dbm(b.bandwidth_hz, b.noise_figure_db);
}

double link_snr_db(const scenario::BackhaulParams& b, double path_loss_db) {
  return b.tx_power_dbm + b.antenna_gain_db - path_loss_db - backhaul_noise_dbm(b);
}

channel::PanelPose facing(Vec3 site, Vec3 normal) {
  const Vec3 up{0.0, 0.0, 1.0};
  Vec3 row = up - dot(up, normal) * normal;
  if (norm(row) < 1e-6) row = Vec3{1.0, 0.0, 0.0} - normal.x * normal;
  row = normalized(row);
  return {site, cross(row, normal), row};
}

}  // namespace

std::optional<RelayPanel> build_relay(const Topology& topology, Vec3 a, Vec3 b, Vec3 site,
                                      double* snr_db) {
  const auto& bh = topology.planner.backhaul;
  if (channel::los_blocked(a, site, topology.obstacles) ||
      channel::los_blocked(site, b, topology.obstacles)) {
    return std::nullopt;
  }
  const Vec3 bisector = normalized(a - site) + normalized(b - site);
  if (norm(bisector) < 1e-9) return std::nullopt;
  const Vec3 normal = normalized(bisector);
  const double freq = bh.freq_ghz * 1e9;
  const auto panel = channel::RisPanel::planar(0, facing(site, normal), bh.relay_rows,
                                               bh.relay_cols, wavelength_m(freq) / 2.0,
                                               channel::binary_phase_states());
  channel::LinkModel model{backhaul_path_loss(bh), freq, bh.relay_element_gain_db, true};
  const channel::CascadeModel cascade(a, panel, b, model, topology.obstacles, true);
  const double eirp = bh.tx_power_dbm + bh.antenna_gain_db;
  ris::IterativeOptions opt;
  opt.record_candidates = false;
  auto result = ris::iterative_optimize(
      [&](const channel::RisConfig& c) { return cascade.received_power_dbm(c, eirp); },
      panel.size(), panel.states.size(), opt);
  *snr_db = result.power_dbm - backhaul_noise_dbm(bh);
  return RelayPanel{site, normal, std::move(result.config)};
}

std::vector<Vec3> relay_candidates(const Topology& topology, Vec3 a, Vec3 b) {
  const double off = topology.planner.relay_corner_offset_m;
  std::vector<Vec3> out;
  for (const auto& box : topology.obstacles) {
    if (!channel::segment_intersects_box(a, b, box)) continue;
    const double z = std::clamp(0.5 * (a.z + b.z), box.min.z, box.max.z);
    out.push_back({box.min.x - off, box.min.y - off, z});
    out.push_back({box.max.x + off, box.min.y - off, z});
    out.push_back({box.max.x + off, box.max.y + off, z});
    out.push_back({box.min.x - off, box.max.y + off, z});
  }
  for (const auto& s : topology.planner.ris_relay_sites) out.push_back(s);
  return out;
}

LinkBudget backhaul_link(const Topology& topology, Vec3 a, Vec3 b) {
  const auto& bh = topology.planner.backhaul;
  const double freq = bh.freq_ghz * 1e9;
  const bool blocked = channel::los_blocked(a, b, topology.obstacles);
  const double pl = channel::path_loss_db(a, b, freq, backhaul_path_loss(bh), blocked);
  LinkBudget out;
  out.snr_db = link_snr_db(bh, pl);
  out.cost_db = pl;
  out.feasible = out.snr_db >= bh.snr_threshold_db;
  if (out.feasible || !blocked) return out;

  // Only blockage stands in the way: try one reflector.
  const double clear_pl = channel::path_loss_db(a, b, freq, backhaul_path_loss(bh), false);
  if (link_snr_db(bh, clear_pl) < bh.snr_threshold_db) return out;
  std::optional<RelayPanel> best;
  double best_snr = -kInf;
  for (const auto& site : relay_candidates(topology, a, b)) {
    double snr = -kInf;
    auto relay = build_relay(topology, a, b, site, &snr);
    if (relay && snr > best_snr) {
      best_snr = snr;
      best = std::move(relay);
    }
  }
  if (best && best_snr >= bh.snr_threshold_db) {
    out.feasible = true;
    out.snr_db = best_snr;
    out.cost_db = link_snr_db(bh, 0.0) - best_snr;
    out.relay = std::move(best);
  }
  return out;
}

std::vector<BackhaulEdge> form_backhaul(const std::vector<Placement>& placements,
                                        const Topology& topology) {
  auto forest = solve_backhaul(placements, topology);
  if (!forest.unreachable.empty()) {
    throw Error(ErrorCode::UnreachablePlacement,
                fmt::format("node {} has no feasible backhaul path", forest.unreachable.front()));
  }
  return std::move(forest.edges);
}

BackhaulForest solve_backhaul(const std::vector<Placement>& placements, const Topology& topology) {
  struct Vertex {
    NodeId id;
    Vec3 position;
    bool root;
    bool satellite;
    bool placement;
  };
  std::vector<Vertex> v;
  for (const auto& n : topology.nodes) {
    if (n.kind == NodeKind::Gateway && n.live()) v.push_back({n.id, n.position, true, false, false});
  }
  for (const auto& n : topology.nodes) {
    if (n.kind == NodeKind::Satellite && n.live()) v.push_back({n.id, n.position, true, true, false});
  }
  const bool any_root = !v.empty();
  for (const auto& n : topology.nodes) {
    if (n.is_access() && topology.operational(n)) {
      v.push_back({n.id, n.position, false, false, false});
    }
  }
  for (const auto& p : placements) v.push_back({p.id, p.position, false, false, true});
  BackhaulForest forest;
  if (!any_root) {
    for (const auto& p : placements) forest.unreachable.push_back(p.id);
    return forest;
  }

  const std::size_t n = v.size();
  std::vector<double> dist(n, kInf);
  std::vector<bool> done(n, false);
  std::vector<std::optional<std::size_t>> parent(n);
  std::vector<LinkBudget> via(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].root) dist[i] = 0.0;
  }
  const auto& planner = topology.planner;
  for (;;) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && dist[i] < kInf && (u == n || dist[i] < dist[u])) u = i;
    }
    if (u == n) break;
    done[u] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (done[w] || v[w].root) continue;
      LinkBudget link;
      if (v[u].satellite) {
        link.feasible = true;
        link.snr_db = planner.satellite_snr_db;
        link.cost_db = planner.satellite_cost_db;
      } else if (v[u].placement || v[w].placement) {
        link = backhaul_link(topology, v[w].position, v[u].position);
      } else {
        // Surviving ground links are taken as they are; no reflectors there.
        const auto& bh = planner.backhaul;
        const double freq = bh.freq_ghz * 1e9;
        const bool blocked = channel::los_blocked(v[w].position, v[u].position, topology.obstacles);
        link.cost_db = channel::path_loss_db(v[w].position, v[u].position, freq,
                                             backhaul_path_loss(bh), blocked);
        link.snr_db = link_snr_db(bh, link.cost_db);
        link.feasible = link.snr_db >= bh.snr_threshold_db;
      }
      if (!link.feasible) continue;
      const double d = dist[u] + link.cost_db;
      if (d < dist[w]) {
        dist[w] = d;
        parent[w] = u;
        via[w] = std::move(link);
      }
    }
  }

  std::vector<bool> emitted(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].placement) continue;
    if (!parent[i]) {
      forest.unreachable.push_back(v[i].id);
      continue;
    }
    for (std::size_t c = i; parent[c] && !emitted[c]; c = *parent[c]) {
      emitted[c] = true;
      forest.edges.push_back(
          {v[c].id, v[*parent[c]].id, via[c].relay, via[c].snr_db, via[c].cost_db});
    }
  }
  return forest;
}

}  // namespace rrs::ntn
