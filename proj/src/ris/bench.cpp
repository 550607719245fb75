#include "rrs/ris/bench.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

#include "rrs/common/error.hpp"
#include "rrs/common/parallel.hpp"
#include "rrs/simcore/rng.hpp"

namespace rrs::ris {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 4> kNames{{
    {Algorithm::Iterative, "iterative"},
    {Algorithm::Grouping, "grouping"},
    {Algorithm::Codebook, "codebook"},
    {Algorithm::Exhaustive, "exhaustive"},
}};

constexpr double kBenchFreqHz = 5.3e9;
constexpr double kGridRadius = 1.7;
constexpr std::array<double, 7> kGridAngles{-45.0, -30.0, -15.0, 0.0, 15.0, 30.0, 45.0};

Vec3 spherical(double r, double azimuth_deg, double elevation_deg) {
  const double az = deg_to_rad(azimuth_deg);
  const double el = deg_to_rad(elevation_deg);
  return {r * std::cos(el) * std::cos(az), r * std::cos(el) * std::sin(az), r * std::sin(el)};
}

std::size_t panel_rows(std::size_t n) {
  std::size_t rows = 1;
  for (std::size_t r = 1; r * r <= n; ++r) {
    if (n % r == 0) rows = r;
  }
  return rows;
}

}  // namespace

std::string_view to_string(Algorithm a) {
  for (const auto& [k, name] : kNames) {
    if (k == a) return name;
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw Error(ErrorCode::UnknownAlgorithm,
              fmt::format("'{}' (known: iterative, grouping, codebook, exhaustive)", name));
}

std::vector<Algorithm> parse_algorithm_list(std::string_view list) {
  std::vector<Algorithm> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto end = comma == std::string_view::npos ? list.size() : comma;
    const auto item = list.substr(start, end - start);
    if (!item.empty()) out.push_back(parse_algorithm(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::UnknownAlgorithm, "empty algorithm list");
  return out;
}

std::vector<channel::RisState> bench_states(std::size_t state_count) {
  if (state_count == 0) throw Error(ErrorCode::ValidationError, "state count must be >= 1");
  if (state_count == 2) return channel::binary_phase_states();
  if (state_count == 4) return channel::polarization_phase_states();
  std::vector<channel::RisState> out;
  for (std::size_t s = 0; s < state_count; ++s) {
    out.push_back({kTwoPi * static_cast<double>(s) / static_cast<double>(state_count), 1.0,
                   fmt::format("p{}", s)});
  }
  return out;
}

BenchInstance make_bench_instance(std::size_t element_count, std::size_t state_count,
                                  std::uint64_t seed) {
  if (element_count == 0) throw Error(ErrorCode::ValidationError, "panel needs N >= 1");
  sim::RngStream rng(seed, "ris.bench");
  BenchInstance inst;
  inst.seed = seed;
  const std::size_t rows = panel_rows(element_count);
  const std::size_t cols = element_count / rows;
  const double pitch = wavelength_m(kBenchFreqHz) / 2.0;
  // Column-major element order: contiguous groups are vertical stripes, which
  // keep azimuth steering available to grouping.
  const channel::PanelPose pose{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, -1.0, 0.0}};
  inst.panel = channel::RisPanel::planar(0, pose, rows, cols, pitch, bench_states(state_count));
  inst.model.freq_hz = kBenchFreqHz;
  inst.model.path_loss = {2.0, 1.0, 20.0};
  inst.tx = spherical(rng.uniform(1.0, 2.0), rng.uniform(-60.0, 60.0), rng.uniform(-5.0, 5.0));
  inst.rx = spherical(rng.uniform(1.2, 3.0), rng.uniform(-60.0, 60.0), rng.uniform(-15.0, 15.0));
  inst.cascade = std::make_shared<const channel::CascadeModel>(
      inst.tx, inst.panel, inst.rx, inst.model, std::span<const Box>{}, false);
  return inst;
}

Codebook bench_codebook(const BenchInstance& instance) {
  const auto grid = angular_grid({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, kGridRadius,
                                 kGridAngles);
  CodebookContext ctx;
  ctx.tx = instance.tx;
  ctx.tx_power_dbm = instance.tx_power_dbm;
  ctx.model = instance.model;
  ctx.grid_description = "7 angles -45..45 deg at 1.7 m";
  // Reference points see the same absorbed direct path as the bench link.
  auto cb = build_codebook(instance.panel, 0, grid, ctx);
  return cb;
}

BenchRow run_algorithm(const BenchInstance& inst, Algorithm algorithm, std::size_t group_count) {
  const std::size_t n = inst.panel.size();
  const std::size_t s = inst.panel.states.size();
  const Evaluator eval = [&inst](const RisConfig& c) { return inst.power_dbm(c); };
  BenchRow row;
  row.algorithm = algorithm;
  row.seed = inst.seed;
  switch (algorithm) {
    case Algorithm::Iterative: {
      IterativeOptions opt;
      opt.record_candidates = false;
      const auto r = iterative_optimize(eval, n, s, opt);
      row.final_power_dbm = r.power_dbm;
      row.evaluations = r.trace.evaluations_used;
      row.feedback_messages = r.trace.feedback_messages;
      break;
    }
    case Algorithm::Grouping: {
      const auto r = grouping_optimize(eval, n, s, group_count);
      row.final_power_dbm = r.power_dbm;
      row.evaluations = r.trace.evaluations_used;
      row.feedback_messages = r.trace.feedback_messages;
      break;
    }
    case Algorithm::Codebook: {
      const auto sel = select_codeword(bench_codebook(inst), inst.rx);
      row.final_power_dbm = inst.power_dbm(sel.codeword);
      row.evaluations = 0;
      row.feedback_messages = sel.feedback_messages;
      break;
    }
    case Algorithm::Exhaustive: {
      const auto r = exhaustive_optimize(eval, n, s);
      row.final_power_dbm = r.power_dbm;
      row.evaluations = r.evaluations;
      row.feedback_messages = r.evaluations;
      break;
    }
  }
  return row;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.algorithms.empty()) throw Error(ErrorCode::UnknownAlgorithm, "no algorithms");
  const std::size_t per_seed = options.algorithms.size();
  std::vector<BenchRow> rows(options.seeds * per_seed);
  parallel_for(options.seeds, [&](std::size_t i) {
    const auto inst = make_bench_instance(options.element_count, options.state_count,
                                          options.first_seed + i);
    for (std::size_t a = 0; a < per_seed; ++a) {
      rows[i * per_seed + a] = run_algorithm(inst, options.algorithms[a], options.group_count);
    }
  });
  return rows;
}

std::vector<BenchMean> bench_means(const std::vector<BenchRow>& rows,
                                   const std::vector<Algorithm>& order) {
  std::vector<BenchMean> out;
  for (auto a : order) {
    BenchMean m{a, 0.0, 0.0, 0.0};
    std::size_t count = 0;
    for (const auto& r : rows) {
      if (r.algorithm != a) continue;
      m.power_dbm += r.final_power_dbm;
      m.evaluations += static_cast<double>(r.evaluations);
      m.feedback_messages += static_cast<double>(r.feedback_messages);
      ++count;
    }
    if (count > 0) {
      const double c = static_cast<double>(count);
      m.power_dbm /= c;
      m.evaluations /= c;
      m.feedback_messages /= c;
    }
    out.push_back(m);
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                     const std::vector<Algorithm>& order) {
  out << "algorithm,seed,final_power_dbm,evaluations,feedback_messages\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{:.6f},{},{}\n", to_string(r.algorithm), r.seed, r.final_power_dbm,
                       r.evaluations, r.feedback_messages);
  }
  for (const auto& m : bench_means(rows, order)) {
    out << fmt::format("{},mean,{:.6f},{:.2f},{:.2f}\n", to_string(m.algorithm), m.power_dbm,
                       m.evaluations, m.feedback_messages);
  }
}

}  // namespace rrs::ris
