#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"
#include "rrs/engine/world.hpp"
#include "rrs/ntn/plan.hpp"
#include "rrs/ric/builtin_apps.hpp"
#include "rrs/ric/ric.hpp"
#include "rrs/ris/codebook.hpp"

using namespace rrs;
using namespace rrs::ric;
using rrs::test::code_of;

namespace {

class FakeHost final : public Host {
 public:
  Snapshot snap;
  sim::MetricsLog log_;
  std::vector<Action> applied;
  std::function<void(const Action&)> on_apply;

  const Snapshot& snapshot(sim::SimTime now) override {
    snap.taken_at = now;
    snap.topology.now = now;
    return snap;
  }
  const sim::MetricsLog& metrics() const override { return log_; }
  void apply(const Action& a) override {
    if (on_apply) on_apply(a);
    applied.push_back(a);
  }
  void log(sim::SimTime t, sim::ActionCategory c, std::string text) override {
    log_.log_action(t, c, std::move(text));
  }
  std::size_t count(sim::ActionCategory c) const {
    return std::count_if(log_.actions().begin(), log_.actions().end(),
                         [c](const sim::ActionRecord& r) { return r.category == c; });
  }
};

class ScriptApp final : public ControllerApp {
 public:
  using Fn = std::function<std::vector<Action>(const AppContext&)>;
  ScriptApp(std::string name, Tier tier, Trigger trigger, Fn fn)
      : name_(std::move(name)), tier_(tier), trigger_(trigger), fn_(std::move(fn)) {}
  std::string name() const override { return name_; }
  Tier tier() const override { return tier_; }
  Trigger trigger() const override { return trigger_; }
  std::vector<Action> on_tick(const AppContext& ctx) override {
    ++calls;
    return fn_(ctx);
  }
  int calls = 0;

 private:
  std::string name_;
  Tier tier_;
  Trigger trigger_;
  Fn fn_;
};

std::unique_ptr<ScriptApp> app(std::string name, Tier tier, std::int64_t every_ms, ScriptApp::Fn fn = {}) {
  if (!fn) fn = [](const AppContext&) { return std::vector<Action>{}; };
  return std::make_unique<ScriptApp>(std::move(name), tier, Periodic{sim::SimTime{every_ms}}, std::move(fn));
}

struct Rig {
  sim::Kernel kernel;
  Ric ric{kernel};
  FakeHost host;
  Rig() {
    kernel.set_handler([this](const sim::Event& e) { ric.dispatch(e, host); });
  }
};

Action act(ActionKind k) { return Action{std::move(k), {}, {}}; }

ntn::Topology struck_small() {
  const auto s = test::small_scenario();
  auto t = ntn::Topology::from_scenario(s, sim::SimTime{30'000});
  for (auto& n : t.nodes) if (n.id == 2) n.status = scenario::NodeStatus::Failed;
  return t;
}

sim::Event tick_event(std::int64_t at) { return {sim::SimTime{at}, sim::EventKind::NonRtTick, sim::AppTickPayload{0}, 1}; }

}  // namespace

TEST(Register, FirstNonRtTickAfterOneInterval) {
  sim::Kernel k;
  Ric r(k);
  std::vector<sim::Event> seen;
  k.set_handler([&](const sim::Event& e) { seen.push_back(e); });
  r.register_app(app("planner", Tier::NonRT, 60'000));
  k.run_until(sim::SimTime{60'000});
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_EQ(seen[0].fire_time.ms, 60'000);
  EXPECT_EQ(seen[0].kind, sim::EventKind::NonRtTick);
}

TEST(Register, IntervalAndNameChecks) {
  sim::Kernel k;
  Ric r(k);
  EXPECT_EQ(code_of([&] { r.register_app(app("x", Tier::NearRT, 5)); }), ErrorCode::InvalidInterval);
  EXPECT_EQ(code_of([&] { r.register_app(app("x", Tier::NearRT, 1'001)); }), ErrorCode::InvalidInterval);
  EXPECT_EQ(code_of([&] { r.register_app(app("x", Tier::NonRT, 999)); }), ErrorCode::InvalidInterval);
  r.register_app(app("x", Tier::NearRT, 10));
  r.register_app(app("y", Tier::NearRT, 1'000));
  EXPECT_EQ(code_of([&] { r.register_app(app("x", Tier::NonRT, 60'000)); }), ErrorCode::DuplicateName);
  EXPECT_EQ(r.app_count(), 2u);
  EXPECT_EQ(r.find("y"), std::size_t{1});
}

TEST(Dispatch, FailingHandlerIsLoggedAndTicksContinue) {
  Rig rig;
  auto a = app("flaky", Tier::NearRT, 100, [](const AppContext&) -> std::vector<Action> {
    throw std::runtime_error("boom");
  });
  auto* raw = a.get();
  rig.ric.register_app(std::move(a));
  rig.kernel.run_until(sim::SimTime{300});
  EXPECT_EQ(raw->calls, 3);
  EXPECT_EQ(rig.host.count(sim::ActionCategory::AppError), 3u);
  EXPECT_NE(rig.host.log_.actions()[0].description.find("boom"), std::string::npos);
}

TEST(Dispatch, ActionsAppliedInOrderWithCauseAndTime) {
  Rig rig;
  rig.ric.register_app(app("pol", Tier::NonRT, 1'000, [](const AppContext&) {
    return std::vector<Action>{act(SwitchPolicy{"max-throughput"}), act(Note{"after"})};
  }));
  rig.kernel.run_until(sim::SimTime{1'000});
  ASSERT_EQ(rig.host.applied.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<SwitchPolicy>(rig.host.applied[0].kind));
  EXPECT_TRUE(std::holds_alternative<Note>(rig.host.applied[1].kind));
  EXPECT_EQ(rig.host.applied[0].cause, "pol");
  EXPECT_EQ(rig.host.applied[1].issued.ms, 1'000);
  ASSERT_EQ(rig.host.log_.actions().size(), 2u);
  EXPECT_EQ(rig.host.log_.actions()[0].category, sim::ActionCategory::Controller);
  EXPECT_EQ(rig.host.log_.actions()[1].category, sim::ActionCategory::Note);
}

TEST(Dispatch, TierIsolationRejectsCrossTierActions) {
  Rig rig;
  rig.ric.register_app(app("near", Tier::NearRT, 100, [](const AppContext&) {
    return std::vector<Action>{act(DeployPlan{}), act(Recluster{2})};
  }));
  rig.ric.register_app(app("non", Tier::NonRT, 1'000, [](const AppContext&) {
    return std::vector<Action>{act(ApplyRisConfig{1, 0, channel::RisConfig::zeros(2), "x"})};
  }));
  rig.kernel.run_until(sim::SimTime{1'000});
  for (const auto& a : rig.host.applied) {
    EXPECT_FALSE(std::holds_alternative<DeployPlan>(a.kind));
    EXPECT_FALSE(std::holds_alternative<ApplyRisConfig>(a.kind));
  }
  EXPECT_EQ(rig.host.applied.size(), 10u);
  EXPECT_EQ(rig.host.count(sim::ActionCategory::AppError), 11u);

  EXPECT_TRUE(tier_allows(Tier::NonRT, DeployPlan{}));
  EXPECT_TRUE(tier_allows(Tier::NonRT, SwitchPolicy{}));
  EXPECT_TRUE(tier_allows(Tier::NearRT, ApplyRisConfig{}));
  EXPECT_FALSE(tier_allows(Tier::NearRT, DeployPlan{}));
  EXPECT_FALSE(tier_allows(Tier::NonRT, ApplyRisConfig{}));
}

TEST(Dispatch, FailedApplyIsLoggedAndLaterActionsStillRun) {
  Rig rig;
  rig.host.on_apply = [](const Action& a) {
    if (std::holds_alternative<Recluster>(a.kind)) throw Error(ErrorCode::NoActiveAps, "none");
  };
  rig.ric.register_app(app("c", Tier::NearRT, 100, [](const AppContext&) {
    return std::vector<Action>{act(Recluster{1}), act(Note{"next"})};
  }));
  rig.kernel.run_until(sim::SimTime{100});
  EXPECT_EQ(rig.host.count(sim::ActionCategory::AppError), 1u);
  EXPECT_EQ(rig.host.count(sim::ActionCategory::Note), 1u);
}

TEST(Dispatch, EventTriggeredAppsSeeTheirEventOnly) {
  Rig rig;
  int moves = 0;
  rig.ric.register_app(std::make_unique<ScriptApp>(
      "mover", Tier::NearRT, OnEvent{sim::EventKind::UeMove}, [&](const AppContext& ctx) {
        EXPECT_EQ(std::get<sim::UeMovePayload>(ctx.trigger.payload).ue_id, 7u);
        ++moves;
        return std::vector<Action>{};
      }));
  rig.kernel.schedule({sim::SimTime{5}, sim::EventKind::UeMove, sim::UeMovePayload{7, {1, 2, 0}}, std::nullopt});
  rig.kernel.schedule({sim::SimTime{6}, sim::EventKind::MeasurementDone, std::monostate{}, std::nullopt});
  rig.kernel.run_until(sim::SimTime{10});
  EXPECT_EQ(moves, 1);
}

TEST(Builtins, NamesAndSelection) {
  const auto names = builtin_app_names();
  EXPECT_EQ(names.front(), "FailureMonitor");
  EXPECT_EQ(names.size(), 8u);
  auto s = test::small_scenario();
  EXPECT_EQ(builtin_apps(s).size(), 8u);
  s.ric.disabled = {"RecoveryPlanner"};
  const auto apps = builtin_apps(s);
  EXPECT_EQ(apps.size(), 7u);
  for (const auto& a : apps) EXPECT_NE(a->name(), "RecoveryPlanner");
  s.ric.disabled = {"Nope"};
  EXPECT_EQ(code_of([&] { builtin_apps(s); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([&] { make_builtin_app("Nope", s); }), ErrorCode::ValidationError);
  s.ric.disabled.clear();
  s.ric.intervals["CfClusterer"] = sim::SimTime{250};
  const auto c = make_builtin_app("CfClusterer", s);
  EXPECT_EQ(std::get<Periodic>(c->trigger()).interval.ms, 250);
}

TEST(Builtins, FailureMonitorQuietWithoutDisaster) {
  const auto s = test::small_scenario();
  auto fm = make_builtin_app("FailureMonitor", s);
  Snapshot snap;
  snap.topology = ntn::Topology::from_scenario(s);
  const sim::MetricsLog log;
  const auto ev = tick_event(60'000);
  auto first = fm->on_tick({sim::SimTime{60'000}, snap, log, ev});
  EXPECT_TRUE(first.empty());

  snap.topology = struck_small();
  const auto r = fm->on_tick({sim::SimTime{60'000}, snap, log, ev});
  ASSERT_EQ(r.size(), 1u);
  const auto& rep = std::get<ReportOutage>(r[0].kind).report;
  EXPECT_EQ(rep.failed, (std::vector<scenario::NodeId>{2}));
  EXPECT_EQ(rep.out_of_service, (std::vector<scenario::NodeId>{12, 13}));
  EXPECT_TRUE(fm->on_tick({sim::SimTime{60'000}, snap, log, ev}).empty());
}

TEST(Builtins, RecoveryPlannerMatchesDirectPlannerCallOneTickLater) {
  const auto s = test::small_scenario();
  auto rp = make_builtin_app("RecoveryPlanner", s);
  Snapshot snap;
  snap.topology = struck_small();
  snap.last_outage = ntn::detect_outage(snap.topology, s.planner.snr_threshold_db);
  snap.last_outage->at = sim::SimTime{60'000};
  const sim::MetricsLog log;
  auto ev = tick_event(60'000);
  EXPECT_TRUE(rp->on_tick({sim::SimTime{60'000}, snap, log, ev}).empty());
  ev.fire_time = sim::SimTime{120'000};
  snap.topology.now = ev.fire_time;
  const auto r = rp->on_tick({ev.fire_time, snap, log, ev});
  ASSERT_EQ(r.size(), 1u);
  ntn::PlanRequest req;
  req.max_nodes = s.planner.max_nodes;
  req.replace_unreachable = true;
  EXPECT_EQ(std::get<DeployPlan>(r[0].kind).plan, ntn::plan_deployment(snap.topology, req));
  EXPECT_TRUE(rp->on_tick({ev.fire_time, snap, log, ev}).empty());
}

TEST(Builtins, PolicySelectorFollowsSchedule) {
  const auto s = test::small_scenario();
  auto ps = make_builtin_app("PolicySelector", s);
  Snapshot snap;
  snap.policy = "fast-recovery";
  snap.schedule = {{sim::SimTime{1'000}, "max-throughput"}, {sim::SimTime{500'000}, "fast-recovery"}};
  const sim::MetricsLog log;
  const auto ev = tick_event(60'000);
  const auto r = ps->on_tick({sim::SimTime{60'000}, snap, log, ev});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(std::get<SwitchPolicy>(r[0].kind).policy, "max-throughput");
  snap.policy = "max-throughput";
  EXPECT_TRUE(ps->on_tick({sim::SimTime{60'000}, snap, log, ev}).empty());
}

TEST(Builtins, ClustererReactsToInventoryChanges) {
  auto cc = make_builtin_app("CfClusterer", test::small_scenario());
  Snapshot snap;
  snap.cluster_size = 2;
  snap.inventory_version = 1;
  const sim::MetricsLog log;
  const auto ev = tick_event(100);
  EXPECT_TRUE(cc->on_tick({sim::SimTime{100}, snap, log, ev}).empty());
  EXPECT_TRUE(cc->on_tick({sim::SimTime{200}, snap, log, ev}).empty());
  snap.inventory_version = 2;
  const auto r = cc->on_tick({sim::SimTime{300}, snap, log, ev});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(std::get<Recluster>(r[0].kind).cluster_size, 2u);
}

TEST(Builtins, StubsLogOnce) {
  auto st = make_builtin_app("SensingManager", test::small_scenario());
  const Snapshot snap;
  const sim::MetricsLog log;
  const auto ev = tick_event(100);
  const auto r = st->on_tick({sim::SimTime{100}, snap, log, ev});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<Note>(r[0].kind));
  EXPECT_TRUE(st->on_tick({sim::SimTime{200}, snap, log, ev}).empty());
}

TEST(Builtins, CodebookTrackerAppliesSelectedCodewordUnderFastRecovery) {
  const auto s = scenario::load_scenario(test::source_path("scenarios/ris_two_user_demo.json"));
  engine::World w(s);
  auto tracker = make_builtin_app("RisCodebookTracker", s);
  const Vec3 p = w.find_node(101)->position + Vec3{0.0, -0.2, 0.0};
  w.move_ue(101, p);
  const sim::Event ev{sim::SimTime{50}, sim::EventKind::UeMove, sim::UeMovePayload{101, p}, 1};
  const sim::MetricsLog log;
  auto snap = w.snapshot(ev.fire_time);
  const auto r = tracker->on_tick({ev.fire_time, snap, log, ev});
  ASSERT_EQ(r.size(), 1u);
  const auto& a = std::get<ApplyRisConfig>(r[0].kind);
  const auto& cb = *w.panels()[0].codebooks.at(a.part);
  const auto sel = ris::select_codeword(cb, p);
  EXPECT_EQ(a.config, sel.codeword);
  EXPECT_EQ(a.method, "codebook#" + std::to_string(sel.entry));
  EXPECT_EQ(snap.panels[0].part_ue.at(a.part), 101u);

  w.set_policy("max-throughput");
  snap = w.snapshot(ev.fire_time);
  EXPECT_TRUE(tracker->on_tick({ev.fire_time, snap, log, ev}).empty());
}

TEST(Policy, KnownNamesAndDescriptions) {
  EXPECT_TRUE(known_policy("fast-recovery"));
  EXPECT_TRUE(known_policy("max-throughput"));
  EXPECT_FALSE(known_policy("fastest"));
  const Action a{Recluster{3}, sim::SimTime{5}, "CfClusterer"};
  EXPECT_EQ(action_name(a.kind), "Recluster");
  EXPECT_NE(describe(a).find("CfClusterer"), std::string::npos);
}
