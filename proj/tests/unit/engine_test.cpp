#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "rrs/engine/run_summary.hpp"
#include "rrs/engine/simulation.hpp"
#include "rrs/engine/world.hpp"

using namespace rrs;
using namespace rrs::engine;
using rrs::test::code_of;
using scenario::NodeStatus;

namespace {

std::size_t count_with(const sim::MetricsLog& log, std::string_view needle) {
  return std::count_if(log.actions().begin(), log.actions().end(), [&](const sim::ActionRecord& r) {
    return r.description.find(needle) != std::string::npos;
  });
}

const sim::ActionRecord* first_with(const sim::MetricsLog& log, std::string_view needle) {
  for (const auto& r : log.actions()) {
    if (r.description.find(needle) != std::string::npos) return &r;
  }
  return nullptr;
}

}  // namespace

TEST(World, DisasterBatteryAndCoverage) {
  World w(test::small_scenario());
  EXPECT_DOUBLE_EQ(w.coverage_ratio(), 1.0);
  const auto v0 = w.inventory_version();
  w.apply_disaster(0, sim::SimTime{30'000});
  EXPECT_EQ(w.find_node(2)->status, NodeStatus::Failed);
  EXPECT_EQ(w.find_node(1)->status, NodeStatus::OnBattery);
  EXPECT_EQ(w.find_node(1)->battery_ms, scenario::kDefaultBatteryReserve.ms);
  EXPECT_GT(w.inventory_version(), v0);
  EXPECT_EQ(w.strike_time(), sim::SimTime{30'000});
  EXPECT_DOUBLE_EQ(w.coverage_ratio(), 0.5);
  ASSERT_TRUE(w.expire_battery(1).has_value());
  EXPECT_EQ(w.find_node(1)->status, NodeStatus::Failed);
  EXPECT_DOUBLE_EQ(w.coverage_ratio(), 0.0);
  EXPECT_FALSE(w.expire_battery(1).has_value());
  EXPECT_EQ(w.active_nodes(), 1u);  // the gateway
}

TEST(World, DeployActivateAndErrors) {
  World w(test::small_scenario());
  w.apply_disaster(0, sim::SimTime{30'000});
  const auto topo = ntn::Topology::from_scenario(w.scenario());
  auto snap = w.snapshot(sim::SimTime{60'000});
  const auto plan = ntn::plan_deployment(snap.topology, {3});
  ASSERT_EQ(plan.placements.size(), 1u);
  const auto pending = w.deploy(plan, sim::SimTime{60'000});
  ASSERT_EQ(pending.size(), 1u);
  EXPECT_EQ(pending[0].ready_at.ms, 60'000 + w.scenario().planner.deploy_time.ms);
  const auto id = plan.placements[0].id;
  EXPECT_EQ(w.find_node(id)->status, NodeStatus::Deploying);
  EXPECT_DOUBLE_EQ(w.coverage_ratio(), 0.5);
  EXPECT_EQ(w.snapshot(sim::SimTime{60'000}).pending_ues, (std::vector<NodeId>{12, 13}));
  EXPECT_EQ(code_of([&] { w.deploy(plan, sim::SimTime{60'000}); }), ErrorCode::ValidationError);
  ASSERT_TRUE(w.activate(id, sim::SimTime{180'000}).has_value());
  EXPECT_EQ(w.find_node(id)->status, NodeStatus::Active);
  EXPECT_TRUE(w.pending().empty());
  EXPECT_DOUBLE_EQ(w.coverage_ratio(), 1.0);
  EXPECT_EQ(w.deployed_nodes(), 1u);
  EXPECT_EQ(code_of([&] { w.move_ue(1, {0, 0, 0}); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([&] { w.move_ue(77, {0, 0, 0}); }), ErrorCode::UnknownNode);
  EXPECT_EQ(code_of([&] { w.set_policy("fastest"); }), ErrorCode::ValidationError);
}

TEST(World, RisConfigPartIsolationAndLength) {
  World w(scenario::load_scenario(test::source_path("scenarios/ris_two_user_demo.json")));
  const auto& panel = w.panels()[0];
  const auto second = panel.panel.part_elements(1);
  const auto before = panel.config;
  auto cfg = channel::RisConfig::zeros(38);
  for (auto& s : cfg.states) s = 3;
  w.apply_ris_config(10, 0, cfg);
  const auto& after = w.panels()[0].config;
  for (auto e : second) EXPECT_EQ(after.states[e], before.states[e]);
  for (auto e : w.panels()[0].panel.part_elements(0)) EXPECT_EQ(after.states[e], 3u);
  EXPECT_EQ(code_of([&] { w.apply_ris_config(10, 0, channel::RisConfig::zeros(5)); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([&] { w.apply_ris_config(11, 0, cfg); }), ErrorCode::UnknownNode);
}

TEST(World, ClustersNeverUseDeadAps) {
  World w(test::small_scenario());
  for (const auto& c : w.clusters()) EXPECT_EQ(c.size(), 2u);
  w.apply_disaster(0, sim::SimTime{30'000});
  w.recluster(2);
  for (const auto& c : w.clusters()) EXPECT_EQ(c, (std::vector<NodeId>{1}));
  const auto tp = w.throughput(sim::SimTime{30'000});
  ASSERT_EQ(tp.size(), 4u);
  for (const auto& t : tp) EXPECT_GE(t.mbps, 0.0);
}

TEST(Simulation, SmallScenarioRecoverySequence) {
  Simulation sim(test::small_scenario());
  const auto& log = sim.run_until(sim::SimTime{400'000});
  const auto* strike = first_with(log, "disaster 0");
  ASSERT_NE(strike, nullptr);
  EXPECT_EQ(strike->time.ms, 30'000);
  const auto* detect = first_with(log, "ReportOutage failed=[2]");
  ASSERT_NE(detect, nullptr);
  EXPECT_EQ(detect->time.ms, 60'000);
  const auto* deploy = first_with(log, "DeployPlan");
  ASSERT_NE(deploy, nullptr);
  EXPECT_EQ(deploy->time.ms, 120'000);
  const auto* active = first_with(log, "active at");
  ASSERT_NE(active, nullptr);
  EXPECT_EQ(active->time.ms, 240'000);
  const auto rt = sim::recovery_time(log, baseline_coverage(log), 0.95);
  ASSERT_TRUE(rt.has_value());
  EXPECT_EQ(rt->ms, 210'000);
}

TEST(Simulation, DeterministicForSeed) {
  Simulation a(test::small_scenario());
  Simulation b(test::small_scenario());
  EXPECT_EQ(a.run_until(sim::SimTime{200'000}), b.run_until(sim::SimTime{200'000}));
  Simulation c(test::small_scenario(), {.seed = 99});
  EXPECT_EQ(c.seed(), 99u);
}

TEST(Simulation, NoDisasterNoOutageActions) {
  auto s = test::small_scenario();
  s.disasters.clear();
  Simulation sim(s);
  const auto& log = sim.run_until(sim::SimTime{300'000});
  EXPECT_EQ(count_with(log, "FailureMonitor"), 0u);
  EXPECT_EQ(count_with(log, "DeployPlan"), 0u);
  for (const auto& smp : log.samples()) EXPECT_DOUBLE_EQ(smp.coverage_ratio, 1.0);
  EXPECT_EQ(code_of([&] { sim::recovery_time(log, 1.0, 0.95); }), ErrorCode::NoDisaster);
}

TEST(Simulation, CoverageChangesAreAttributable) {
  const auto s = scenario::load_scenario(test::source_path("scenarios/earthquake_demo.json"));
  Simulation sim(s);
  const auto& log = sim.run_until(sim::SimTime{1'200'000});
  const auto& smp = log.samples();
  for (std::size_t i = 1; i < smp.size(); ++i) {
    if (smp[i].coverage_ratio == smp[i - 1].coverage_ratio) continue;
    const bool explained = std::any_of(log.actions().begin(), log.actions().end(), [&](const sim::ActionRecord& r) {
      return r.time > smp[i - 1].time && r.time <= smp[i].time && r.category != sim::ActionCategory::Note &&
             r.category != sim::ActionCategory::AppError;
    });
    EXPECT_TRUE(explained) << "coverage moved at " << smp[i].time.ms;
  }
}

TEST(Simulation, PolicySwitchRoutesRisActionsToIterative) {
  auto s = scenario::load_scenario(test::source_path("scenarios/ris_two_user_demo.json"));
  s.ric.schedule = {{sim::SimTime{1'500}, "max-throughput"}};
  s.ric.intervals["PolicySelector"] = sim::SimTime{1'000};
  Simulation sim(s);
  const auto& log = sim.run_until(sim::SimTime{8'000});
  const auto* sw = first_with(log, "SwitchPolicy");
  ASSERT_NE(sw, nullptr);
  EXPECT_EQ(sw->time.ms, 2'000);
  for (const auto& r : log.actions()) {
    const auto m = ris_method(r.description);
    if (!m) continue;
    if (r.time < sw->time) EXPECT_EQ(*m, "codebook");
    if (r.time > sw->time) EXPECT_EQ(m->rfind("iterative", 0), 0u) << *m;
  }
  EXPECT_GT(count_with(log, "iterative-probe"), 0u);
}

TEST(Simulation, IterativeTunerUsesOneProbePerStatePerElement) {
  const auto s = scenario::load_scenario(test::source_path("scenarios/ris_indoor_throughput.json"));
  Simulation sim(s);
  const auto& log = sim.run_until(sim::SimTime{120'000});
  EXPECT_EQ(count_with(log, "iterative-probe"), 303u);
  EXPECT_EQ(count_with(log, "iterative(304 evaluations)"), 1u);
}

TEST(RunSummary, JsonShapeAndOutputs) {
  Simulation sim(test::small_scenario());
  const auto until = sim::SimTime{400'000};
  const auto& log = sim.run_until(until);
  auto summary = summarize(log, sim.world().scenario(), "small.json", until);
  EXPECT_DOUBLE_EQ(summary.initial_coverage, 1.0);
  EXPECT_DOUBLE_EQ(summary.final_coverage, 1.0);
  ASSERT_TRUE(summary.recovery.has_value());
  EXPECT_DOUBLE_EQ(summary.recovery->min_coverage, 0.5);
  EXPECT_EQ(summary.deploy_actions, 1u);
  EXPECT_EQ(summary.nodes_activated, 1u);
  const auto dir = std::filesystem::temp_directory_path() / "rrs_engine_test_out";
  std::filesystem::remove_all(dir);
  summary = write_run_outputs(dir, log, summary);
  for (const char* f : {"metrics.csv", "actions.log", "summary.json"}) EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  const auto j = to_json(summary);
  EXPECT_EQ(j.at("recovery_time_ms").get<int>(), 210'000);
  EXPECT_EQ(j.at("seed").get<int>(), 3);
  EXPECT_EQ(j.at("outputs").size(), 3u);

  auto s = test::small_scenario();
  s.ric.disabled = {"RecoveryPlanner"};
  Simulation idle(s);
  const auto& l2 = idle.run_until(until);
  EXPECT_EQ(to_json(summarize(l2, s, "small.json", until)).at("recovery_time_ms"), "not_recovered");
  std::filesystem::remove_all(dir);
}

TEST(RunSummary, RisMethodParsing) {
  EXPECT_EQ(ris_method("RisCodebookTracker ApplyRisConfig panel=10 part=0 method=codebook#3"), "codebook");
  EXPECT_EQ(ris_method("RisIterativeTuner ApplyRisConfig panel=10 part=0 method=iterative(304 evaluations)"),
            "iterative");
  EXPECT_EQ(ris_method("CfClusterer Recluster L=2"), std::nullopt);
}
