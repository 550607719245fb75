#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rrs/channel/cascade.hpp"
#include "rrs/ris/codebook.hpp"

namespace rrs::ris {

enum class Algorithm { Iterative, Grouping, Codebook, Exhaustive };

std::string_view to_string(Algorithm a);
// Throws UnknownAlgorithm.
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> parse_algorithm_list(std::string_view comma_separated);

// State sets by size: 2 -> {0, pi}, 4 -> polarisation x phase, otherwise
// uniform phases 2 pi s / S.
std::vector<channel::RisState> bench_states(std::size_t state_count);

// One random RIS-only link (direct path absorbed): panel at the origin facing
// +x, transmitter and receiver scattered in front of it. The receiver is
// off the codebook grid, which covers +-45 deg at 1.7 m.
struct BenchInstance {
  std::uint64_t seed = 0;
  channel::RisPanel panel;
  Vec3 tx;
  Vec3 rx;
  channel::LinkModel model;
  double tx_power_dbm = 20.0;
  std::shared_ptr<const channel::CascadeModel> cascade;

  double power_dbm(const RisConfig& config) const {
    return cascade->received_power_dbm(config, tx_power_dbm);
  }
};

BenchInstance make_bench_instance(std::size_t element_count, std::size_t state_count,
                                  std::uint64_t seed);
Codebook bench_codebook(const BenchInstance& instance);

struct BenchRow {
  Algorithm algorithm = Algorithm::Iterative;
  std::uint64_t seed = 0;
  double final_power_dbm = 0.0;
  std::size_t evaluations = 0;
  std::size_t feedback_messages = 0;
};

BenchRow run_algorithm(const BenchInstance& instance, Algorithm algorithm,
                       std::size_t group_count);

struct BenchOptions {
  std::size_t element_count = 16;
  std::size_t state_count = 4;
  std::size_t group_count = 4;
  std::uint64_t first_seed = 1;
  std::size_t seeds = 100;
  std::vector<Algorithm> algorithms{Algorithm::Iterative, Algorithm::Grouping,
                                    Algorithm::Codebook};
};

// Rows ordered by seed, then by the requested algorithm order.
std::vector<BenchRow> run_bench(const BenchOptions& options);

struct BenchMean {
  Algorithm algorithm = Algorithm::Iterative;
  double power_dbm = 0.0;
  double evaluations = 0.0;
  double feedback_messages = 0.0;
};
std::vector<BenchMean> bench_means(const std::vector<BenchRow>& rows,
                                   const std::vector<Algorithm>& order);

// algorithm,seed,final_power_dbm,evaluations,feedback_messages with one
// "mean" row per algorithm at the end.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                     const std::vector<Algorithm>& order);

}  // namespace rrs::ris
