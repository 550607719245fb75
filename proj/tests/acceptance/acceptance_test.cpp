// One line per acceptance criterion; exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "rrs/channel/cascade.hpp"
#include "rrs/cli/cli.hpp"
#include "rrs/engine/run_summary.hpp"
#include "rrs/engine/simulation.hpp"
#include "rrs/engine/world.hpp"
#include "rrs/ntn/placement.hpp"
#include "rrs/ntn/plan.hpp"
#include "rrs/ris/bench.hpp"
#include "rrs/ris/codebook.hpp"
#include "rrs/ris/optimizers.hpp"
#include "rrs/ris/partition.hpp"
#include "rrs/scenario/scenario.hpp"
#include "rrs/simcore/rng.hpp"

using namespace rrs;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, std::string what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "" : "FAILED ") + std::move(what));
  }
};

std::string scenario_path(const char* name) { return std::string(RRS_SOURCE_DIR) + "/scenarios/" + name; }

double lin(double dbm) { return std::pow(10.0, dbm / 10.0); }

// 1 -------------------------------------------------------------------------

Verdict evaluation_count() {
  Verdict v;
  const auto b = ris::make_bench_instance(76, 4, 1);
  std::size_t calls = 0;
  const auto r = ris::iterative_optimize(
      [&](const channel::RisConfig& c) {
        ++calls;
        return b.power_dbm(c);
      },
      76, 4);
  v.check(calls == 304, fmt::format("evaluator calls {}", calls));
  v.check(r.trace.evaluations_used == 304, fmt::format("trace evaluations {}", r.trace.evaluations_used));
  return v;
}

// 2 -------------------------------------------------------------------------

Verdict table_ordering() {
  Verdict v;
  ris::BenchOptions o;
  o.element_count = 16;
  o.state_count = 4;
  o.group_count = 4;
  o.seeds = 100;
  const auto rows = ris::run_bench(o);
  const auto means = ris::bench_means(rows, o.algorithms);
  const double it = means[0].power_dbm, gr = means[1].power_dbm, cb = means[2].power_dbm;
  v.check(it >= gr && gr >= cb, fmt::format("mean dBm iterative {:.2f} >= grouping {:.2f} >= codebook {:.2f}", it, gr, cb));
  std::size_t bad_counts = 0;
  for (const auto& r : rows) {
    const std::size_t want = r.algorithm == ris::Algorithm::Iterative ? 64 : r.algorithm == ris::Algorithm::Grouping ? 16 : 0;
    if (r.evaluations != want) ++bad_counts;
  }
  v.check(bad_counts == 0, fmt::format("evaluations 64/16/0 on all {} rows", rows.size()));

  std::size_t violations = 0, cases = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto inst = ris::make_bench_instance(n, 2, seed);
      const ris::Evaluator ev = [&](const channel::RisConfig& c) { return inst.power_dbm(c); };
      const double ex = ris::exhaustive_optimize(ev, n, 2).power_dbm;
      for (auto a : {ris::Algorithm::Iterative, ris::Algorithm::Grouping, ris::Algorithm::Codebook}) {
        ++cases;
        if (ris::run_algorithm(inst, a, std::min<std::size_t>(2, n)).final_power_dbm > ex + 1e-12) ++violations;
      }
    }
  }
  v.check(violations == 0, fmt::format("exhaustive dominance violations {} of {} (N=2..10, |S|=2)", violations, cases));
  return v;
}

// 3 -------------------------------------------------------------------------

std::complex<double> direct_sum(Vec3 tx, const channel::RisPanel& panel, const channel::RisConfig& cfg, Vec3 rx,
                                const channel::LinkModel& m) {
  auto seg = [&](Vec3 a, Vec3 b) {
    const double d = std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
    const double lambda = 299'792'458.0 / m.freq_hz;
    const double pl = 20.0 * std::log10(4.0 * std::numbers::pi * m.path_loss.d0_m / lambda) +
                      10.0 * m.path_loss.exponent * std::log10(d / m.path_loss.d0_m);
    return std::pow(10.0, -pl / 20.0) * std::polar(1.0, -2.0 * std::numbers::pi * d / lambda);
  };
  std::complex<double> h = seg(tx, rx);
  const double ge = std::pow(10.0, m.element_gain_db / 20.0);
  for (std::size_t k = 0; k < panel.size(); ++k) {
    const auto& s = panel.states[cfg.states[k]];
    h += ge * seg(tx, panel.elements[k]) * std::polar(s.amplitude, s.phase_rad) * seg(panel.elements[k], rx);
  }
  return h;
}

Verdict oracle_equivalence() {
  Verdict v;
  ris::IterativeOptions conv;
  conv.until_converged = true;
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto b = ris::make_bench_instance(8, 2, seed);
    const ris::Evaluator ev = [&](const channel::RisConfig& c) { return b.power_dbm(c); };
    const double ex = ris::exhaustive_optimize(ev, 8, 2).power_dbm;
    const double it = ris::iterative_optimize(ev, 8, 2, conv).power_dbm;
    if (lin(it) >= 0.95 * lin(ex)) ++good;
  }
  v.check(good >= 95, fmt::format("fixed point within 95% of exhaustive in {}/100 seeds (need 95)", good));

  sim::RngStream r(2024, "acceptance.cascade");
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t rows = 1 + r.index(6), cols = 1 + r.index(12);
    const auto states = r.uniform() < 0.5 ? channel::polarization_phase_states() : channel::binary_phase_states();
    channel::LinkModel m{{r.uniform(1.8, 3.5), 1.0, 20.0}, r.uniform(1e9, 30e9), r.uniform(0.0, 12.0), true};
    const auto panel = channel::RisPanel::planar(1, channel::PanelPose{{0, 0, 0}}, rows, cols,
                                                 299'792'458.0 / m.freq_hz / 2.0, states);
    const Vec3 tx{r.uniform(0.5, 20.0), r.uniform(-10, 10), r.uniform(-5, 5)};
    const Vec3 rx{r.uniform(0.5, 20.0), r.uniform(-10, 10), r.uniform(-5, 5)};
    auto cfg = channel::RisConfig::zeros(panel.size());
    for (auto& s : cfg.states) s = static_cast<std::uint32_t>(r.index(states.size()));
    const channel::CascadeModel cm(tx, panel, rx, m, {}, true);
    const auto want = direct_sum(tx, panel, cfg, rx, m);
    worst = std::max(worst, std::abs(cm.gain(cfg) - want) / std::abs(want));
  }
  v.check(worst <= 1e-9, fmt::format("cascade vs direct summation worst relative error {:.2e} over 1000", worst));
  return v;
}

// 4 -------------------------------------------------------------------------

Verdict two_user_demo() {
  Verdict v;
  const auto s = scenario::load_scenario(scenario_path("ris_two_user_demo.json"));
  engine::World w(s);
  const auto& rt = w.panels().at(0);
  const auto& spec = rt.spec;
  const auto& ap = s.node(spec.codebooks.at(0).tx);
  const auto model = s.channel.link_model(ap.freq_ghz * 1e9, ap.aerial());
  std::map<scenario::NodeId, std::vector<Vec3>> points;
  for (const auto& t : s.trajectories) {
    for (const auto& wp : t.waypoints) points[t.ue].push_back(wp.position);
  }
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t p = 0; p < spec.parts.size(); ++p) parts.push_back(rt.panel.part_elements(p));

  std::size_t checked = 0, order_failures = 0;
  double min_gain_cb = 1e9, min_gain_it = 1e9;
  const std::size_t n_points = points.begin()->second.size();
  for (std::size_t i = 0; i < n_points; ++i) {
    // Codebook configuration for both parts at this test point.
    auto codebook_cfg = channel::RisConfig::zeros(rt.panel.size());
    for (const auto& [part, ue] : spec.part_ue) {
      const auto sel = ris::select_codeword(*rt.codebooks.at(part), points.at(ue).at(i));
      codebook_cfg = ris::merge_part(codebook_cfg, parts[part], sel.codeword);
    }
    for (const auto& [part, ue] : spec.part_ue) {
      const Vec3 pos = points.at(ue).at(i);
      const channel::CascadeModel cm(ap.position, rt.panel, pos, model, w.obstacles(), true);
      const double zeros = cm.received_power_dbm(channel::RisConfig::zeros(rt.panel.size()), ap.tx_power_dbm);
      const double cb = cm.received_power_dbm(codebook_cfg, ap.tx_power_dbm);
      const auto it = ris::iterative_optimize(
          [&](const channel::RisConfig& c) {
            return cm.received_power_dbm(ris::merge_part(codebook_cfg, parts[part], c), ap.tx_power_dbm);
          },
          parts[part].size(), rt.panel.states.size());
      ++checked;
      if (!(it.power_dbm >= cb && cb >= zeros)) {
        ++order_failures;
        v.notes.push_back(fmt::format("UE {} point {}: iterative {:.2f} codebook {:.2f} zeros {:.2f}", ue, i,
                                      it.power_dbm, cb, zeros));
      }
      min_gain_cb = std::min(min_gain_cb, cb - zeros);
      min_gain_it = std::min(min_gain_it, it.power_dbm - cb);
    }
  }
  v.check(checked == 14 && order_failures == 0,
          fmt::format("iterative >= codebook >= no-phase-shift at {}/{} UE test points (min margins {:.2f} / {:.2f} dB)",
                      checked - order_failures, checked, min_gain_it, min_gain_cb));

  // The tracker, as run by the RIC, reacts to each move with zero feedback.
  engine::Simulation sim(s);
  const auto& log = sim.run_until(sim::SimTime{8'000});
  std::size_t codebook_actions = 0, probes = 0;
  for (const auto& a : log.actions()) {
    const auto m = engine::ris_method(a.description);
    if (m == "codebook") ++codebook_actions;
    if (m && m->rfind("iterative", 0) == 0) ++probes;
  }
  v.check(codebook_actions == 2 * n_points && probes == 0,
          fmt::format("{} codebook actions, {} feedback messages", codebook_actions, probes));
  return v;
}

// 5 -------------------------------------------------------------------------

Verdict indoor_throughput() {
  Verdict v;
  const auto s = scenario::load_scenario(scenario_path("ris_indoor_throughput.json"));
  const auto off_at = s.disasters.at(0).strike;
  const auto panel = s.panels.at(0).node;
  engine::Simulation sim(s);
  const auto& log = sim.run_until(off_at + sim::SimTime{20'000});
  std::optional<sim::SimTime> tuned;
  for (const auto& a : log.actions()) {
    if (a.description.find("iterative(") != std::string::npos) tuned = a.time;
  }
  v.check(tuned.has_value(), fmt::format("iterative run finished at {} ms", tuned ? tuned->ms : -1));
  const auto ue = s.panels.at(0).part_ue.begin()->second;
  auto rate = [&](const sim::Sample& smp) {
    for (const auto& t : smp.throughput) {
      if (t.ue_id == ue) return t.mbps;
    }
    return -1.0;
  };
  double lo = 1e9, hi = -1e9, off_max = -1e9;
  std::optional<sim::Sample> first_off;
  for (const auto& smp : log.samples()) {
    if (tuned && smp.time > *tuned && smp.time < off_at) {
      lo = std::min(lo, rate(smp));
      hi = std::max(hi, rate(smp));
    }
    if (smp.time >= off_at) {
      off_max = std::max(off_max, rate(smp));
      if (!first_off) first_off = smp;
    }
  }
  v.check(lo >= 18.0 && hi <= 21.0, fmt::format("post-iterative throughput in [{:.2f}, {:.2f}] Mbps", lo, hi));
  v.check(off_max < 10.0, fmt::format("RIS-off throughput at most {:.2f} Mbps", off_max));
  const bool switched_off = std::any_of(log.actions().begin(), log.actions().end(), [&](const sim::ActionRecord& a) {
    return a.time == off_at && a.description.find(fmt::format("failed=[{}]", panel)) != std::string::npos;
  });
  const bool fast = first_off && first_off->time - off_at <= s.ticks.nearrt && rate(*first_off) < 10.0;
  v.check(switched_off && fast, fmt::format("drop to {:.2f} Mbps observed {} ms after the RIS went off",
                                            first_off ? rate(*first_off) : -1.0,
                                            first_off ? (first_off->time - off_at).ms : -1));
  return v;
}

// 6 -------------------------------------------------------------------------

Verdict earthquake_recovery() {
  Verdict v;
  const auto s = scenario::load_scenario(scenario_path("earthquake_demo.json"));
  const auto strike = s.disasters.at(0).strike;
  const sim::SimTime until = strike + s.battery_reserve + sim::SimTime{600'000};

  engine::Simulation with_planner(s);
  const auto& log = with_planner.run_until(until);
  const auto sum = engine::summarize(log, s, "earthquake_demo.json", until);
  const bool recovered = sum.recovery && sum.recovery->recovery_time;
  v.check(recovered, fmt::format("built-in apps: recovery_time_ms {}",
                                 recovered ? std::to_string(sum.recovery->recovery_time->ms) : "not_recovered"));
  v.check(s.disasters[0].failed.size() == 10 && s.disasters[0].power_loss.size() == 8,
          fmt::format("strike fails {} and batteries {}", s.disasters[0].failed.size(), s.disasters[0].power_loss.size()));

  std::vector<std::int64_t> expiries;
  for (const auto& a : log.actions()) {
    if (a.category == sim::ActionCategory::BatteryExpiry) expiries.push_back(a.time.ms);
  }
  const bool exact = expiries.size() == 8 && std::all_of(expiries.begin(), expiries.end(), [&](std::int64_t t) {
                       return t == strike.ms + 14'400'000;
                     });
  v.check(exact, fmt::format("{} battery expiries, all at strike + 14400000 ms", expiries.size()));

  auto disabled = s;
  disabled.ric.disabled.push_back("RecoveryPlanner");
  engine::Simulation without(disabled);
  const auto& log2 = without.run_until(until);
  const auto sum2 = engine::summarize(log2, disabled, "earthquake_demo.json", until);
  v.check(sum2.recovery && !sum2.recovery->recovery_time, "RecoveryPlanner disabled: not_recovered");
  return v;
}

// 7 -------------------------------------------------------------------------

scenario::Scenario random_small_world(std::uint64_t seed) {
  sim::RngStream r(seed, "acceptance.planner");
  scenario::Scenario s;
  s.name = fmt::format("small-{}", seed);
  s.seed = seed;
  s.channel.rayleigh_fading = false;
  s.cfmimo.realizations = 1;
  s.planner.snr_threshold_db = 10.0;
  s.planner.lattice_spacing_m = 500.0;
  s.planner.max_nodes = 1 + r.index(3);
  s.planner.area = Box{{0, 0, 0}, {1000, 500, 0}};
  using scenario::NodeKind;
  s.nodes.push_back({1, NodeKind::Gateway, {-50, -50, 30}});
  s.nodes.push_back({2, NodeKind::Satellite, {500, 250, 550'000}});
  const std::size_t bss = 2 + r.index(3);
  scenario::DisasterEvent strike{sim::SimTime{1'000}, {}, {}, {}};
  for (std::size_t i = 0; i < bss; ++i) {
    const auto id = static_cast<scenario::NodeId>(10 + i);
    s.nodes.push_back({id, NodeKind::TerrestrialBS, {r.uniform(0, 1000), r.uniform(0, 500), 25}, scenario::NodeStatus::Operational,
                       r.uniform(20.0, 40.0)});
    if (r.uniform() < 0.6) strike.failed.push_back(id);
  }
  const std::size_t ues = 1 + r.index(12);
  for (std::size_t i = 0; i < ues; ++i) {
    s.nodes.push_back({static_cast<scenario::NodeId>(100 + i), NodeKind::UE, {r.uniform(-300, 1300), r.uniform(-300, 800), 1.5}});
  }
  if (r.uniform() < 0.5) s.obstacles.push_back({{400, -400, 0}, {420, 900, 60}});
  s.disasters.push_back(strike);
  return s;
}

Verdict planner_guarantees() {
  Verdict v;
  std::size_t ratio_violations = 0, soundness_violations = 0, nonempty = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto s = random_small_world(seed);
    engine::World w(s);
    w.apply_disaster(0, sim::SimTime{1'000});
    const auto topo = w.snapshot(sim::SimTime{1'000}).topology;
    const auto out = ntn::detect_outage(topo, s.planner.snr_threshold_db).out_of_service;
    const auto cands = ntn::candidate_lattice(*s.planner.area, s.planner.lattice_spacing_m, s.planner.uav_altitude_m);
    const auto covers = ntn::candidate_coverage(topo, out, cands, s.planner.snr_threshold_db);
    for (std::size_t u = 0; u <= 3; ++u) {
      const auto g = ntn::greedy_max_coverage(covers, out.size(), u);
      const auto e = ntn::exact_max_coverage(covers, out.size(), u);
      if (static_cast<double>(g.covered) < (1.0 - 1.0 / std::numbers::e) * static_cast<double>(e.covered)) ++ratio_violations;
    }

    const auto plan = ntn::plan_deployment(topo, {s.planner.max_nodes});
    if (!plan.empty()) ++nonempty;
    w.deploy(plan, sim::SimTime{1'000});
    for (const auto& p : plan.placements) w.activate(p.id, sim::SimTime{1'000} + s.planner.deploy_time);
    const double simulated = w.coverage_ratio();
    if (simulated < plan.estimated_coverage_ratio - 1e-9) {
      ++soundness_violations;
      v.notes.push_back(fmt::format("seed {}: simulated {:.4f} < estimate {:.4f}", seed, simulated,
                                    plan.estimated_coverage_ratio));
    }
  }
  v.check(ratio_violations == 0, fmt::format("greedy >= (1-1/e) optimum: {} violations over 50 seeds x U=0..3", ratio_violations));
  v.check(soundness_violations == 0,
          fmt::format("plan soundness: {} violations ({} non-empty plans)", soundness_violations, nonempty));
  return v;
}

// 8 -------------------------------------------------------------------------

std::map<std::string, std::string> snapshot_tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  if (!fs::exists(root)) return files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(e.path(), root).string()] = s.str();
  }
  return files;
}

Verdict determinism() {
  Verdict v;
  const fs::path root = fs::temp_directory_path() / "rrs_acceptance_determinism";
  const std::string eq = scenario_path("earthquake_demo.json");
  const std::string two = scenario_path("ris_two_user_demo.json");
  const std::string indoor = scenario_path("ris_indoor_throughput.json");
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
      {"run", {"run", "--scenario", eq, "--until", "2000000", "--out", (root / "out").string()}},
      {"run two-user", {"run", "--scenario", two, "--out", (root / "out").string()}},
      {"run indoor", {"run", "--scenario", indoor, "--until", "160000", "--out", (root / "out").string()}},
      {"run sweep", {"run", "--scenario", eq, "--until", "900000", "--sweep", "seeds=1..3", "--out", (root / "out").string()}},
      {"ris bench", {"ris", "bench", "--seeds", "30", "--algorithms", "iterative,grouping,codebook,exhaustive", "--panel", "8,2",
                     "--out", (root / "out" / "bench.csv").string()}},
      {"plan", {"plan", "--scenario", eq, "--max-nodes", "3", "--out", (root / "out" / "plan.json").string()}},
      {"codebook build", {"codebook", "build", "--scenario", two, "--out", (root / "out").string()}},
  };
  for (const auto& [label, args] : commands) {
    std::map<std::string, std::string> first;
    std::string first_stdout;
    bool same = true;
    for (int rep = 0; rep < 2; ++rep) {
      fs::remove_all(root);
      std::ostringstream out, err;
      const int code = cli::run_cli(args, out, err);
      if (code != cli::kOk) {
        v.check(false, fmt::format("{} exited {}: {}", label, code, err.str()));
        same = false;
        break;
      }
      const auto files = snapshot_tree(root);
      if (rep == 0) {
        first = files;
        first_stdout = out.str();
      } else {
        same = files == first && out.str() == first_stdout && !files.empty();
      }
    }
    v.check(same, fmt::format("{}: {} file(s) byte-identical", label, first.size()));
  }
  fs::remove_all(root);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, std::function<Verdict()>, double>> criteria{
      {1, "evaluation count", evaluation_count, 1.0},
      {2, "optimizer ordering", table_ordering, 60.0},
      {3, "oracle equivalence", oracle_equivalence, 30.0},
      {4, "two-user codebook demo", two_user_demo, 10.0},
      {5, "indoor throughput demo", indoor_throughput, 10.0},
      {6, "earthquake recovery", earthquake_recovery, 120.0},
      {7, "planner guarantees", planner_guarantees, 60.0},
      {8, "determinism", determinism, 600.0},
  };
  int failed = 0;
  for (const auto& [id, name, fn, budget_s] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.check(false, fmt::format("exception: {}", e.what()));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.check(secs < budget_s, fmt::format("runtime {:.2f} s (limit {:.0f} s)", secs, budget_s));
    std::cout << fmt::format("criterion {}: {} - {}\n", id, v.pass ? "PASS" : "FAIL", name);
    for (const auto& n : v.notes) std::cout << "    " << n << "\n";
    if (!v.pass) ++failed;
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
