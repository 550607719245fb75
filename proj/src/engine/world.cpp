#include "rrs/engine/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "rrs/common/error.hpp"
#include "rrs/ris/partition.hpp"

namespace rrs::engine {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

std::map<std::size_t, std::shared_ptr<const ris::Codebook>> build_panel_codebooks(
    const scenario::Scenario& s, const scenario::RisPanelSpec& spec, const channel::RisPanel& panel) {
  std::map<std::size_t, std::shared_ptr<const ris::Codebook>> out;
  const Node& host = s.node(spec.node);
  for (const auto& cb : spec.codebooks) {
    const Node& tx = s.node(cb.tx);
    ris::CodebookContext ctx;
    ctx.tx = tx.position;
    ctx.tx_power_dbm = tx.tx_power_dbm;
    ctx.model = s.channel.link_model(tx.freq_ghz * 1e9, tx.aerial());
    ctx.obstacles = s.obstacles;
    ctx.grid_description = fmt::format("{} angles [{}] deg at {} m", cb.angles_deg.size(),
                                       fmt::join(cb.angles_deg, ","), cb.radius_m);
    const auto grid = ris::angular_grid(host.position, spec.normal(), spec.row_axis, cb.radius_m,
                                        cb.angles_deg);
    out[cb.part] = std::make_shared<const ris::Codebook>(ris::build_codebook(panel, cb.part, grid, ctx));
  }
  return out;
}

World::World(scenario::Scenario s)
    : scenario_(std::move(s)), fading_rng_(scenario_.seed, "cfmimo.fading") {
  scenario_.validate();
  if (!ric::known_policy(scenario_.ric.policy)) {
    throw Error(ErrorCode::ValidationError, fmt::format("unknown policy '{}'", scenario_.ric.policy));
  }
  for (const auto& c : scenario_.ric.schedule) {
    if (!ric::known_policy(c.policy)) {
      throw Error(ErrorCode::ValidationError, fmt::format("unknown policy '{}' in schedule", c.policy));
    }
  }
  nodes_ = scenario_.nodes;
  obstacles_ = scenario_.obstacles;
  policy_ = scenario_.ric.policy;
  cluster_size_ = scenario_.cfmimo.cluster_size;
  for (const auto& n : nodes_) {
    if (n.live()) last_heartbeat_[n.id] = sim::kTimeZero;
  }
  for (const auto& spec : scenario_.panels) {
    PanelRuntime rt;
    rt.spec = spec;
    rt.panel = spec.build(scenario_.node(spec.node).position);
    rt.config = channel::RisConfig::zeros(rt.panel.size());
    rt.codebooks = build_panel_codebooks(scenario_, spec, rt.panel);
    panels_.push_back(std::move(rt));
  }
  recluster(cluster_size_);
}

const Node* World::find_node(NodeId id) const {
  auto it = std::find_if(nodes_.begin(), nodes_.end(), [id](const Node& n) { return n.id == id; });
  return it == nodes_.end() ? nullptr : &*it;
}

Node& World::node_ref(NodeId id) {
  auto it = std::find_if(nodes_.begin(), nodes_.end(), [id](const Node& n) { return n.id == id; });
  if (it == nodes_.end()) throw Error(ErrorCode::UnknownNode, fmt::format("node {}", id));
  return *it;
}

std::string World::apply_disaster(std::size_t index, sim::SimTime now) {
  const auto& d = scenario_.disasters.at(index);
  if (!strike_) strike_ = now;
  std::size_t failed = 0;
  std::size_t battery = 0;
  for (auto id : d.failed) {
    auto& n = node_ref(id);
    if (n.status != scenario::NodeStatus::Failed) ++failed;
    n.status = scenario::NodeStatus::Failed;
    n.battery_ms = 0;
  }
  for (auto id : d.power_loss) {
    auto& n = node_ref(id);
    if (!n.live() || n.status == scenario::NodeStatus::OnBattery) continue;
    n.status = scenario::NodeStatus::OnBattery;
    n.battery_ms = scenario_.battery_reserve.ms;
    ++battery;
  }
  obstacles_.insert(obstacles_.end(), d.blockers.begin(), d.blockers.end());
  touch_inventory();
  return fmt::format("disaster {}: failed=[{}] on_battery=[{}] blockers={} ({} destroyed, {} on battery)",
                     index, fmt::join(d.failed, ","), fmt::join(d.power_loss, ","),
                     d.blockers.size(), failed, battery);
}

std::optional<std::string> World::expire_battery(NodeId id) {
  auto& n = node_ref(id);
  if (n.status != scenario::NodeStatus::OnBattery) return std::nullopt;
  n.status = scenario::NodeStatus::Failed;
  n.battery_ms = 0;
  touch_inventory();
  return fmt::format("node {} battery exhausted", id);
}

void World::heartbeat_sweep(sim::SimTime now) {
  for (const auto& n : nodes_) {
    if (n.infrastructure() && n.live()) last_heartbeat_[n.id] = now;
  }
}

std::optional<std::string> World::activate(NodeId id, sim::SimTime now) {
  auto& n = node_ref(id);
  std::erase_if(pending_, [id](const PendingNode& p) { return p.id == id; });
  if (n.status != scenario::NodeStatus::Deploying) return std::nullopt;
  n.status = scenario::NodeStatus::Active;
  last_heartbeat_[id] = now;
  touch_inventory();
  return fmt::format("node {} ({}) active at ({:.1f}, {:.1f}, {:.1f})", id,
                     scenario::to_string(n.kind), n.position.x, n.position.y, n.position.z);
}

void World::move_ue(NodeId id, Vec3 position) {
  auto& n = node_ref(id);
  if (n.kind != scenario::NodeKind::UE) {
    throw Error(ErrorCode::ValidationError, fmt::format("node {} is not a UE", id));
  }
  n.position = position;
  touch_radio();
}

std::vector<PendingNode> World::deploy(const ntn::DeploymentPlan& plan, sim::SimTime now) {
  std::vector<PendingNode> out;
  for (const auto& p : plan.placements) {
    if (find_node(p.id)) throw Error(ErrorCode::ValidationError, fmt::format("node id {} already in use", p.id));
  }
  for (const auto& p : plan.placements) {
    nodes_.push_back(p.as_node(scenario::NodeStatus::Deploying));
    PendingNode pn{p.id, now + scenario_.planner.deploy_time, p.covers};
    pending_.push_back(pn);
    out.push_back(std::move(pn));
    ++deployed_;
  }
  touch_inventory();
  return out;
}

void World::apply_ris_config(NodeId panel_id, std::size_t part, const channel::RisConfig& part_config) {
  auto it = std::find_if(panels_.begin(), panels_.end(),
                         [panel_id](const PanelRuntime& p) { return p.spec.node == panel_id; });
  if (it == panels_.end()) throw Error(ErrorCode::UnknownNode, fmt::format("no RIS panel {}", panel_id));
  if (part >= it->panel.part_count()) {
    throw Error(ErrorCode::ValidationError, fmt::format("panel {} has no part {}", panel_id, part));
  }
  const auto elements = it->panel.part_elements(part);
  if (part_config.size() != elements.size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("part {} has {} elements, config {}", part, elements.size(), part_config.size()));
  }
  auto merged = ris::merge_part(it->config, elements, part_config);
  it->panel.check_config(merged);
  if (merged != it->config) {
    it->config = std::move(merged);
    touch_radio();
  }
}

void World::recluster(std::size_t cluster_size) {
  if (cluster_size == 0) throw Error(ErrorCode::ValidationError, "cluster size must be >= 1");
  cluster_size_ = cluster_size;
  const auto& r = radio();
  cfmimo::GainTable table;
  for (auto a : r.aps) {
    table.ap_ids.push_back(nodes_[a].id);
    table.ap_live.push_back(nodes_[a].live());
  }
  for (auto u : r.ues) table.ue_ids.push_back(nodes_[u].id);
  table.gain_db.resize(r.gain.size());
  for (std::size_t i = 0; i < r.gain.size(); ++i) {
    const double mag = std::abs(r.gain[i]);
    table.gain_db[i] = mag > 0.0 ? 20.0 * std::log10(mag) : kNegInf;
  }
  serving_.assign(r.ues.size(), {});
  if (std::none_of(table.ap_live.begin(), table.ap_live.end(), [](bool b) { return b; })) {
    ++cluster_version_;
    return;
  }
  const auto assignment = cfmimo::cluster(table, cluster_size);
  for (std::size_t k = 0; k < r.ues.size(); ++k) serving_[k] = assignment.serving_ids(k);
  ++cluster_version_;
}

void World::set_policy(const std::string& policy) {
  if (!ric::known_policy(policy)) throw Error(ErrorCode::ValidationError, fmt::format("unknown policy '{}'", policy));
  policy_ = policy;
}

channel::RadioEnvironment World::environment() const {
  std::vector<channel::PanelInstance> instances;
  for (const auto& p : panels_) {
    const Node* host = find_node(p.spec.node);
    instances.push_back({p.panel, p.config, host && host->live()});
  }
  return channel::RadioEnvironment(scenario_.channel, obstacles_, std::move(instances));
}

const World::Radio& World::radio() {
  if (radio_ && radio_cached_at_ == radio_version_) return *radio_;
  Radio r;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].is_access()) r.aps.push_back(i);
    if (nodes_[i].kind == scenario::NodeKind::UE) r.ues.push_back(i);
  }
  const auto env = environment();
  const double noise = scenario_.channel.noise_floor_dbm();
  r.gain.assign(r.aps.size() * r.ues.size(), {0.0, 0.0});
  r.snr_db.assign(r.aps.size() * r.ues.size(), kNegInf);
  for (std::size_t m = 0; m < r.aps.size(); ++m) {
    const Node& ap = nodes_[r.aps[m]];
    if (!ap.live()) continue;
    for (std::size_t k = 0; k < r.ues.size(); ++k) {
      const auto g = env.gain(ap.endpoint(), ntn::ue_endpoint(nodes_[r.ues[k]]));
      r.gain[m * r.ues.size() + k] = g;
      r.snr_db[m * r.ues.size() + k] = channel::gain_to_dbm(g, ap.tx_power_dbm) - noise;
    }
  }
  radio_ = std::move(r);
  radio_cached_at_ = radio_version_;
  return *radio_;
}

double World::coverage_ratio() {
  if (coverage_ && coverage_cached_at_ == radio_version_) return *coverage_;
  const auto& r = radio();
  const double threshold = scenario_.planner.snr_threshold_db;
  std::size_t covered = 0;
  for (std::size_t k = 0; k < r.ues.size(); ++k) {
    double best = kNegInf;
    for (std::size_t m = 0; m < r.aps.size(); ++m) best = std::max(best, r.snr_db[m * r.ues.size() + k]);
    if (best >= threshold) ++covered;
  }
  coverage_ = r.ues.empty() ? 1.0 : static_cast<double>(covered) / static_cast<double>(r.ues.size());
  coverage_cached_at_ = radio_version_;
  return *coverage_;
}

std::vector<sim::UeThroughput> World::throughput(sim::SimTime now) {
  const auto& r = radio();
  const std::size_t K = r.ues.size();
  const std::size_t M = r.aps.size();
  cfmimo::ClusterAssignment assignment;
  for (auto a : r.aps) assignment.ap_ids.push_back(nodes_[a].id);
  for (auto u : r.ues) assignment.ue_ids.push_back(nodes_[u].id);
  assignment.serving.resize(K);
  for (std::size_t k = 0; k < K && k < serving_.size(); ++k) {
    for (auto id : serving_[k]) {
      auto it = std::find(assignment.ap_ids.begin(), assignment.ap_ids.end(), id);
      if (it != assignment.ap_ids.end()) {
        assignment.serving[k].push_back(static_cast<std::size_t>(it - assignment.ap_ids.begin()));
      }
    }
  }

  const bool redraw = scenario_.cfmimo.redraw_each_sample && scenario_.channel.rayleigh_fading;
  const std::pair key{radio_version_, cluster_version_};
  if (redraw || sinr_.size() != K || sinr_cached_at_ != key) {
    std::vector<double> power(M, 0.0);
    for (std::size_t m = 0; m < M; ++m) {
      if (nodes_[r.aps[m]].live()) power[m] = dbm_to_mw(nodes_[r.aps[m]].tx_power_dbm);
    }
    const double noise = dbm_to_mw(scenario_.cfmimo.noise_dbm.value_or(scenario_.channel.noise_floor_dbm()));
    sinr_ = cfmimo::mean_sinr(assignment, r.gain, power, noise, scenario_.cfmimo.realizations,
                              fading_rng_, scenario_.channel.rayleigh_fading);
    sinr_cached_at_ = key;
  }

  const std::int64_t since = strike_ ? (now - *strike_).ms : -1;
  const std::vector<double> offered(K, scenario_.traffic.offered_mbps(since));
  const auto delivered = cfmimo::serve(assignment, sinr_, offered, scenario_.channel.mcs);
  std::vector<sim::UeThroughput> out(K);
  for (std::size_t k = 0; k < K; ++k) out[k] = {nodes_[r.ues[k]].id, delivered[k]};
  return out;
}

std::size_t World::active_nodes() const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) {
    return n.infrastructure() && n.live();
  }));
}

sim::Sample World::sample(sim::SimTime now) {
  sim::Sample s;
  s.time = now;
  s.coverage_ratio = coverage_ratio();
  s.throughput = throughput(now);
  s.active_nodes = active_nodes();
  return s;
}

ric::Snapshot World::snapshot(sim::SimTime now) const {
  ric::Snapshot snap;
  snap.taken_at = now;
  auto& t = snap.topology;
  t.now = now;
  t.nonrt_window = scenario_.ticks.nonrt;
  t.nodes = nodes_;
  t.last_heartbeat = last_heartbeat_;
  t.obstacles = obstacles_;
  t.channel = scenario_.channel;
  t.planner = scenario_.planner;
  for (const auto& p : panels_) {
    const Node* host = find_node(p.spec.node);
    const bool active = host && host->live();
    t.panels.push_back({p.panel, p.config, active});
    ric::PanelView view;
    view.node = p.spec.node;
    view.panel = p.panel;
    view.config = p.config;
    view.active = active;
    view.part_ue = p.spec.part_ue;
    for (const auto& cb : p.spec.codebooks) view.part_tx[cb.part] = cb.tx;
    view.codebooks = p.codebooks;
    snap.panels.push_back(std::move(view));
  }
  snap.policy = policy_;
  snap.last_outage = last_outage_;
  for (const auto& pn : pending_) {
    for (auto id : pn.covers) {
      if (std::find(snap.pending_ues.begin(), snap.pending_ues.end(), id) == snap.pending_ues.end()) {
        snap.pending_ues.push_back(id);
      }
    }
  }
  snap.deployed_nodes = deployed_;
  snap.cluster_size = cluster_size_;
  snap.inventory_version = inventory_version_;
  snap.schedule = scenario_.ric.schedule;
  return snap;
}

}  // namespace rrs::engine
