#include "rrs/ric/builtin_apps.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "rrs/common/error.hpp"
#include "rrs/ris/partition.hpp"

namespace rrs::ric {

namespace {

using scenario::NodeId;

sim::SimTime interval_for(const scenario::Scenario& s, const std::string& name, Tier tier) {
  auto it = s.ric.intervals.find(name);
  if (it != s.ric.intervals.end()) return it->second;
  return tier == Tier::NonRT ? s.ticks.nonrt : s.ticks.nearrt;
}

class FailureMonitor final : public ControllerApp {
 public:
  FailureMonitor(sim::SimTime interval, double threshold)
      : interval_(interval), threshold_(threshold) {}
  std::string name() const override { return "FailureMonitor"; }
  Tier tier() const override { return Tier::NonRT; }
  Trigger trigger() const override { return Periodic{interval_}; }

  std::vector<Action> on_tick(const AppContext& ctx) override {
    auto report = ntn::detect_outage(ctx.snapshot.topology, threshold_);
    if (report.failed == last_failed_ && report.out_of_service == last_out_) return {};
    last_failed_ = report.failed;
    last_out_ = report.out_of_service;
    return {Action{ReportOutage{std::move(report)}, ctx.now, {}}};
  }

 private:
  sim::SimTime interval_;
  double threshold_;
  std::vector<NodeId> last_failed_;
  std::vector<NodeId> last_out_;
};

class RecoveryPlanner final : public ControllerApp {
 public:
  explicit RecoveryPlanner(sim::SimTime interval) : interval_(interval) {}
  std::string name() const override { return "RecoveryPlanner"; }
  Tier tier() const override { return Tier::NonRT; }
  Trigger trigger() const override { return Periodic{interval_}; }

  std::vector<Action> on_tick(const AppContext& ctx) override {
    const auto& snap = ctx.snapshot;
    // Reports raised at this very tick are picked up on the next one.
    if (!snap.last_outage || snap.last_outage->at >= ctx.now) return {};
    if (handled_ && *handled_ == snap.last_outage->at) return {};
    handled_ = snap.last_outage->at;
    const auto& oos = snap.last_outage->out_of_service;
    const bool pending_only = std::all_of(oos.begin(), oos.end(), [&](NodeId id) {
      return std::find(snap.pending_ues.begin(), snap.pending_ues.end(), id) !=
             snap.pending_ues.end();
    });
    const std::size_t budget = snap.topology.planner.max_nodes;
    if (pending_only || snap.deployed_nodes >= budget) return {};

    ntn::PlanRequest req;
    req.max_nodes = budget - snap.deployed_nodes;
    req.exclude_ues = snap.pending_ues;
    req.replace_unreachable = true;
    auto plan = ntn::plan_deployment(snap.topology, req);
    if (plan.empty()) return {};
    return {Action{DeployPlan{std::move(plan)}, ctx.now, {}}};
  }

 private:
  sim::SimTime interval_;
  std::optional<sim::SimTime> handled_;
};

class PolicySelector final : public ControllerApp {
 public:
  explicit PolicySelector(sim::SimTime interval) : interval_(interval) {}
  std::string name() const override { return "PolicySelector"; }
  Tier tier() const override { return Tier::NonRT; }
  Trigger trigger() const override { return Periodic{interval_}; }

  std::vector<Action> on_tick(const AppContext& ctx) override {
    std::optional<std::string> due;
    for (const auto& change : ctx.snapshot.schedule) {
      if (change.at <= ctx.now) due = change.policy;
    }
    if (!due || *due == ctx.snapshot.policy) return {};
    return {Action{SwitchPolicy{*due}, ctx.now, {}}};
  }

 private:
  sim::SimTime interval_;
};

class RisCodebookTracker final : public ControllerApp {
 public:
  std::string name() const override { return "RisCodebookTracker"; }
  Tier tier() const override { return Tier::NearRT; }
  Trigger trigger() const override { return OnEvent{sim::EventKind::UeMove}; }

  std::vector<Action> on_tick(const AppContext& ctx) override {
    const auto& snap = ctx.snapshot;
    if (snap.policy != kPolicyFastRecovery) return {};
    const auto* move = std::get_if<sim::UeMovePayload>(&ctx.trigger.payload);
    if (!move) return {};
    std::vector<Action> out;
    for (const auto& view : snap.panels) {
      if (!view.active) continue;
      for (const auto& [part, ue] : view.part_ue) {
        if (ue != move->ue_id) continue;
        auto cb = view.codebooks.find(part);
        if (cb == view.codebooks.end()) continue;
        auto sel = ris::select_codeword(*cb->second, move->position);
        out.push_back(Action{ApplyRisConfig{view.node, part, std::move(sel.codeword),
                                            fmt::format("codebook#{}", sel.entry)},
                             ctx.now, {}});
      }
    }
    return out;
  }
};

class RisIterativeTuner final : public ControllerApp {
 public:
  explicit RisIterativeTuner(sim::SimTime interval) : interval_(interval) {}
  std::string name() const override { return "RisIterativeTuner"; }
  Tier tier() const override { return Tier::NearRT; }
  Trigger trigger() const override { return Periodic{interval_}; }

  std::vector<Action> on_tick(const AppContext& ctx) override {
    const auto& snap = ctx.snapshot;
    if (snap.policy != kPolicyMaxThroughput) {
      runs_.clear();
      return {};
    }
    std::vector<Action> out;
    for (std::size_t pi = 0; pi < snap.panels.size(); ++pi) {
      const auto& view = snap.panels[pi];
      for (const auto& [part, ue] : view.part_ue) {
        const Key key{view.node, part};
        if (!view.active) {
          runs_.erase(key);
          continue;
        }
        const auto* ue_node = snap.topology.find(ue);
        const auto tx = part_transmitter(snap, view, part);
        if (!ue_node || !tx) continue;
        auto it = runs_.find(key);
        if (it != runs_.end() && it->second.search.done() &&
            it->second.ue_position == ue_node->position && it->second.tx == *tx) {
          continue;
        }
        if (it == runs_.end() || it->second.search.done()) {
          const std::size_t n = view.panel.part_elements(part).size();
          Run run{ris::GroupSearch(ris::singleton_groups(n), view.panel.states.size(),
                                   channel::RisConfig::zeros(n), 1, false),
                  ue_node->position, *tx};
          it = runs_.insert_or_assign(key, std::move(run)).first;
        }
        auto& search = it->second.search;
        const auto candidate = search.candidate();
        search.report(part_power_dbm(snap, pi, part, candidate, *tx, ue));
        if (search.done()) {
          out.push_back(Action{ApplyRisConfig{view.node, part, search.best(),
                                              fmt::format("iterative({} evaluations)",
                                                          search.evaluations())},
                               ctx.now, {}});
        } else {
          out.push_back(Action{ApplyRisConfig{view.node, part, candidate,
                                              fmt::format("iterative-probe#{}", search.evaluations())},
                               ctx.now, {}});
        }
      }
    }
    return out;
  }

 private:
  using Key = std::pair<NodeId, std::size_t>;
  struct Run {
    ris::GroupSearch search;
    Vec3 ue_position;
    NodeId tx;
  };
  sim::SimTime interval_;
  std::map<Key, Run> runs_;
};

class CfClusterer final : public ControllerApp {
 public:
  explicit CfClusterer(sim::SimTime interval) : interval_(interval) {}
  std::string name() const override { return "CfClusterer"; }
  Tier tier() const override { return Tier::NearRT; }
  Trigger trigger() const override { return Periodic{interval_}; }

  std::vector<Action> on_tick(const AppContext& ctx) override {
    const auto v = ctx.snapshot.inventory_version;
    if (!seen_) {
      seen_ = v;
      return {};
    }
    if (*seen_ == v) return {};
    seen_ = v;
    return {Action{Recluster{ctx.snapshot.cluster_size}, ctx.now, {}}};
  }

 private:
  sim::SimTime interval_;
  std::optional<std::uint64_t> seen_;
};

class StubApp final : public ControllerApp {
 public:
  StubApp(std::string name, std::string note, sim::SimTime interval)
      : name_(std::move(name)), note_(std::move(note)), interval_(interval) {}
  std::string name() const override { return name_; }
  Tier tier() const override { return Tier::NearRT; }
  Trigger trigger() const override { return Periodic{interval_}; }

  std::vector<Action> on_tick(const AppContext& ctx) override {
    if (noted_) return {};
    noted_ = true;
    return {Action{Note{note_}, ctx.now, {}}};
  }

 private:
  std::string name_;
  std::string note_;
  sim::SimTime interval_;
  bool noted_ = false;
};

}  // namespace

std::vector<std::string> builtin_app_names() {
  return {"FailureMonitor",   "RecoveryPlanner", "PolicySelector",    "RisCodebookTracker",
          "RisIterativeTuner", "CfClusterer",     "SensingManager",    "EnergyManager"};
}

std::unique_ptr<ControllerApp> make_builtin_app(const std::string& name,
                                                const scenario::Scenario& s) {
  if (name == "FailureMonitor") {
    return std::make_unique<FailureMonitor>(interval_for(s, name, Tier::NonRT),
                                            s.planner.snr_threshold_db);
  }
  if (name == "RecoveryPlanner") {
    return std::make_unique<RecoveryPlanner>(interval_for(s, name, Tier::NonRT));
  }
  if (name == "PolicySelector") {
    return std::make_unique<PolicySelector>(interval_for(s, name, Tier::NonRT));
  }
  if (name == "RisCodebookTracker") return std::make_unique<RisCodebookTracker>();
  if (name == "RisIterativeTuner") {
    return std::make_unique<RisIterativeTuner>(interval_for(s, name, Tier::NearRT));
  }
  if (name == "CfClusterer") {
    return std::make_unique<CfClusterer>(interval_for(s, name, Tier::NearRT));
  }
  if (name == "SensingManager") {
    return std::make_unique<StubApp>(name, "sensing management is a stub; no sensing model",
                                     interval_for(s, name, Tier::NearRT));
  }
  if (name == "EnergyManager") {
    return std::make_unique<StubApp>(name, "energy management is a stub; no energy model",
                                     interval_for(s, name, Tier::NearRT));
  }
  throw Error(ErrorCode::ValidationError, fmt::format("unknown app '{}'", name));
}

std::vector<std::unique_ptr<ControllerApp>> builtin_apps(const scenario::Scenario& s) {
  const auto names = s.ric.apps.empty() ? builtin_app_names() : s.ric.apps;
  for (const auto& d : s.ric.disabled) {
    const auto all = builtin_app_names();
    if (std::find(all.begin(), all.end(), d) == all.end()) {
      throw Error(ErrorCode::ValidationError, fmt::format("cannot disable unknown app '{}'", d));
    }
  }
  std::vector<std::unique_ptr<ControllerApp>> out;
  for (const auto& n : names) {
    if (std::find(s.ric.disabled.begin(), s.ric.disabled.end(), n) != s.ric.disabled.end()) continue;
    out.push_back(make_builtin_app(n, s));
  }
  return out;
}

std::optional<NodeId> part_transmitter(const Snapshot& snap, const PanelView& view,
                                       std::size_t part) {
  auto it = view.part_tx.find(part);
  if (it != view.part_tx.end()) {
    const auto* n = snap.topology.find(it->second);
    if (n && snap.topology.operational(*n)) return n->id;
    return std::nullopt;
  }
  auto ue_it = view.part_ue.find(part);
  if (ue_it == view.part_ue.end()) return std::nullopt;
  const auto* ue = snap.topology.find(ue_it->second);
  if (!ue) return std::nullopt;
  const auto env = snap.topology.environment();
  std::optional<NodeId> best;
  double best_snr = -std::numeric_limits<double>::infinity();
  for (const auto& n : snap.topology.nodes) {
    if (!n.is_access() || !snap.topology.operational(n)) continue;
    const double snr = ntn::access_snr_db(env, n, ue->position);
    if (snr > best_snr) {
      best_snr = snr;
      best = n.id;
    }
  }
  return best;
}

double part_power_dbm(const Snapshot& snap, std::size_t panel_index, std::size_t part,
                      const channel::RisConfig& part_config, NodeId tx, NodeId ue) {
  auto panels = snap.topology.panels;
  auto& inst = panels.at(panel_index);
  inst.config = ris::merge_part(inst.config, inst.panel.part_elements(part), part_config);
  const channel::RadioEnvironment env(snap.topology.channel, snap.topology.obstacles,
                                      std::move(panels));
  const auto& t = *snap.topology.find(tx);
  const auto& u = *snap.topology.find(ue);
  return env.link(t.endpoint(), ntn::ue_endpoint(u)).received_power_dbm;
}

}  // namespace rrs::ric
