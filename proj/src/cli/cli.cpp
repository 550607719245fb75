#include "rrs/cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rrs/common/atomic_file.hpp"
#include "rrs/common/error.hpp"
#include "rrs/common/parallel.hpp"
#include "rrs/engine/run_summary.hpp"
#include "rrs/engine/simulation.hpp"
#include "rrs/ntn/plan.hpp"
#include "rrs/ris/bench.hpp"

namespace rrs::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::UnknownNode:
    case ErrorCode::UnknownAlgorithm:
    case ErrorCode::UncoveredElement:
    case ErrorCode::Overlap:
    case ErrorCode::LengthMismatch:
    case ErrorCode::DuplicateName:
    case ErrorCode::InvalidInterval:
    case ErrorCode::TooLarge:
      return kInvalidInput;
    case ErrorCode::UnreachablePlacement:
      return kUnreachable;
    default:
      return kFailure;
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw Error(ErrorCode::ValidationError, fmt::format("bad {} '{}'", what, s));
  return v;
}

// "seeds=a..b", inclusive.
std::pair<std::uint64_t, std::uint64_t> parse_sweep(const std::string& spec) {
  const std::string prefix = "seeds=";
  const auto dots = spec.find("..");
  if (spec.rfind(prefix, 0) != 0 || dots == std::string::npos) {
    throw Error(ErrorCode::ValidationError, fmt::format("sweep must look like seeds=a..b, got '{}'", spec));
  }
  const auto a = parse_u64(spec.substr(prefix.size(), dots - prefix.size()), "sweep start");
  const auto b = parse_u64(spec.substr(dots + 2), "sweep end");
  if (b < a) throw Error(ErrorCode::ValidationError, fmt::format("empty sweep range '{}'", spec));
  return {a, b};
}

struct RunArgs {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> until_ms;
  std::string out = "out";
  bool require_recovery = false;
  std::string sweep;
};

// Default horizon: one hour past the last strike, or one hour.
sim::SimTime default_until(const scenario::Scenario& s) {
  sim::SimTime last{0};
  for (const auto& d : s.disasters) last = std::max(last, d.strike);
  return last + sim::SimTime::from_minutes(60);
}

struct RunOutcome {
  engine::RunSummary summary;
  bool recovered = true;
};

RunOutcome run_one(const scenario::Scenario& base, const RunArgs& args, std::optional<std::uint64_t> seed,
                   const fs::path& dir) {
  engine::SimulationOptions opts;
  opts.seed = seed;
  engine::Simulation sim(base, std::move(opts));
  const auto until = args.until_ms ? sim::SimTime{*args.until_ms} : default_until(base);
  const auto& log = sim.run_until(until);
  auto summary = engine::summarize(log, sim.world().scenario(), args.scenario, until);
  summary = engine::write_run_outputs(dir, log, std::move(summary));
  const bool recovered = !summary.recovery || summary.recovery->recovery_time.has_value();
  return {std::move(summary), recovered};
}

void print_run(std::ostream& out, const RunOutcome& r) {
  const auto& s = r.summary;
  out << fmt::format("seed {}: final coverage {:.4f}", s.seed, s.final_coverage);
  if (s.recovery) {
    if (s.recovery->recovery_time) {
      out << fmt::format(", recovery_time_ms {}", s.recovery->recovery_time->ms);
    } else {
      out << ", not_recovered";
    }
  } else {
    out << ", no strike before horizon";
  }
  out << fmt::format(" -> {}\n", fs::path(s.outputs.back()).parent_path().string());
}

int cmd_run(const RunArgs& args, std::ostream& out) {
  const auto scenario = scenario::load_scenario(args.scenario);
  if (args.until_ms && *args.until_ms < 0) throw Error(ErrorCode::ValidationError, "--until must be >= 0");
  bool all_recovered = true;
  if (args.sweep.empty()) {
    const auto r = run_one(scenario, args, args.seed, args.out);
    print_run(out, r);
    all_recovered = r.recovered;
  } else {
    const auto [a, b] = parse_sweep(args.sweep);
    const std::size_t n = static_cast<std::size_t>(b - a + 1);
    std::vector<std::optional<RunOutcome>> results(n);
    parallel_for(n, [&](std::size_t i) {
      const auto seed = a + i;
      results[i] = run_one(scenario, args, seed, fs::path(args.out) / fmt::format("seed_{}", seed));
    });
    for (const auto& r : results) {
      print_run(out, *r);
      all_recovered = all_recovered && r->recovered;
    }
  }
  return args.require_recovery && !all_recovered ? kNotRecovered : kOk;
}

struct BenchArgs {
  std::string panel = "16,4";
  std::size_t seeds = 100;
  std::uint64_t first_seed = 1;
  std::string algorithms = "iterative,grouping,codebook";
  std::size_t groups = 4;
  std::string out = "ris_bench.csv";
};

int cmd_ris_bench(const BenchArgs& args, std::ostream& out) {
  ris::BenchOptions opts;
  const auto comma = args.panel.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ValidationError, "--panel must be N,S");
  opts.element_count = parse_u64(args.panel.substr(0, comma), "element count");
  opts.state_count = parse_u64(args.panel.substr(comma + 1), "state count");
  if (opts.element_count == 0 || opts.state_count < 2) {
    throw Error(ErrorCode::ValidationError, "--panel needs N >= 1 and S >= 2");
  }
  opts.algorithms = ris::parse_algorithm_list(args.algorithms);
  opts.seeds = args.seeds;
  opts.first_seed = args.first_seed;
  opts.group_count = args.groups;
  const auto rows = ris::run_bench(opts);
  std::ostringstream csv;
  ris::write_bench_csv(csv, rows, opts.algorithms);
  write_file_atomic(args.out, csv.str());
  for (const auto& m : ris::bench_means(rows, opts.algorithms)) {
    out << fmt::format("{:<10} mean power {:8.3f} dBm  evaluations {:7.1f}  feedback {:7.1f}\n",
                       ris::to_string(m.algorithm), m.power_dbm, m.evaluations, m.feedback_messages);
  }
  out << fmt::format("wrote {}\n", args.out);
  return kOk;
}

struct PlanArgs {
  std::string scenario;
  std::optional<std::size_t> max_nodes;
  std::optional<std::int64_t> at_ms;
  std::string out = "plan.json";
};

int cmd_plan(const PlanArgs& args, std::ostream& out) {
  const auto scenario = scenario::load_scenario(args.scenario);
  sim::SimTime at{0};
  for (const auto& d : scenario.disasters) at = std::max(at, d.strike);
  if (args.at_ms) at = sim::SimTime{*args.at_ms};
  if (at.ms < 0) throw Error(ErrorCode::ValidationError, "--at must be >= 0");

  // Scenario events only, so the plan sees the damage without any controller reaction.
  engine::SimulationOptions opts;
  opts.builtin_apps = false;
  engine::Simulation sim(scenario, std::move(opts));
  sim.run_until(at);
  const auto topology = sim.world().snapshot(at).topology;

  ntn::PlanRequest request;
  request.max_nodes = args.max_nodes.value_or(scenario.planner.max_nodes);
  const auto plan = ntn::plan_deployment(topology, request);
  out << fmt::format("plan at {} ms\n", at.ms) << ntn::format_plan(plan);
  write_file_atomic(args.out, ntn::to_json(plan).dump(2) + "\n");
  out << fmt::format("wrote {}\n", args.out);
  return kOk;
}

struct CodebookArgs {
  std::string scenario;
  std::string out = "codebooks";
  std::string build_date;
};

int cmd_codebook_build(const CodebookArgs& args, std::ostream& out) {
  const auto scenario = scenario::load_scenario(args.scenario);
  std::size_t written = 0;
  for (const auto& spec : scenario.panels) {
    const auto panel = spec.build(scenario.node(spec.node).position);
    for (const auto& [part, cb] : engine::build_panel_codebooks(scenario, spec, panel)) {
      auto book = *cb;
      book.metadata.build_date = args.build_date;
      const auto path = fs::path(args.out) / fmt::format("codebook_{}_{}.json", spec.node, part);
      write_file_atomic(path, ris::to_json(book).dump(2) + "\n");
      out << fmt::format("panel {} part {}: {} codewords -> {}\n", spec.node, part, book.entries.size(),
                         path.string());
      ++written;
    }
  }
  if (written == 0) out << "scenario declares no codebooks\n";
  return kOk;
}

}  // namespace

void configure_logging() {
  static std::once_flag once;
  std::call_once(once, [] {
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("RRS_LOG_LEVEL")) {
      const std::string v = env;
      if (v == "error" || v == "warn" || v == "info" || v == "debug") {
        spdlog::set_level(spdlog::level::from_str(v));
      } else {
        spdlog::warn("ignoring RRS_LOG_LEVEL={}", v);
      }
    }
  });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging();
  CLI::App app{"Disaster-resilient RAN simulator"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario and write metrics.csv, actions.log, summary.json");
  run_cmd->add_option("--scenario", run.scenario, "Scenario JSON")->required();
  run_cmd->add_option("--seed", run.seed, "Master seed (default: scenario seed)");
  run_cmd->add_option("--until", run.until_ms, "Simulated horizon in ms (default: last strike + 1 h)");
  run_cmd->add_option("--out", run.out, "Output directory");
  run_cmd->add_flag("--require-recovery", run.require_recovery, "Exit 3 when a struck run does not recover");
  run_cmd->add_option("--sweep", run.sweep, "seeds=a..b, one subdirectory per seed");

  auto* ris_cmd = app.add_subcommand("ris", "RIS tools");
  ris_cmd->require_subcommand(1);
  BenchArgs bench;
  auto* bench_cmd = ris_cmd->add_subcommand("bench", "Compare RIS optimizers on random geometries");
  bench_cmd->add_option("--panel", bench.panel, "N,S: elements and states per element");
  bench_cmd->add_option("--seeds", bench.seeds, "Number of geometries");
  bench_cmd->add_option("--first-seed", bench.first_seed, "First geometry seed");
  bench_cmd->add_option("--algorithms", bench.algorithms, "Comma list of iterative,grouping,codebook,exhaustive");
  bench_cmd->add_option("--groups", bench.groups, "Group count for grouping");
  bench_cmd->add_option("--out", bench.out, "CSV output path");

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "Plan an NTN deployment on a post-strike snapshot");
  plan_cmd->add_option("--scenario", plan.scenario, "Scenario JSON")->required();
  plan_cmd->add_option("--max-nodes", plan.max_nodes, "Placement budget (default: planner.max_nodes)");
  plan_cmd->add_option("--at", plan.at_ms, "Snapshot time in ms (default: last strike)");
  plan_cmd->add_option("--out", plan.out, "Plan JSON output path");

  auto* codebook_cmd = app.add_subcommand("codebook", "RIS codebook tools");
  codebook_cmd->require_subcommand(1);
  CodebookArgs cb;
  auto* cb_build = codebook_cmd->add_subcommand("build", "Build the codebooks a scenario declares");
  cb_build->add_option("--scenario", cb.scenario, "Scenario JSON")->required();
  cb_build->add_option("--out", cb.out, "Output directory");
  cb_build->add_option("--build-date", cb.build_date, "Stamp stored in the metadata");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*run_cmd) return cmd_run(run, out);
    if (*bench_cmd) return cmd_ris_bench(bench, out);
    if (*plan_cmd) return cmd_plan(plan, out);
    if (*cb_build) return cmd_codebook_build(cb, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace rrs::cli
