#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rrs/channel/ris_panel.hpp"

namespace rrs::ris {

using channel::RisConfig;
using channel::RisState;

// Measures a candidate configuration, returning received power in dBm.
using Evaluator = std::function<double(const RisConfig&)>;

struct TraceEntry {
  std::size_t index = 0;
  RisConfig candidate;
  double power_dbm = 0.0;
};

struct OptimizationTrace {
  std::vector<TraceEntry> entries;
  std::size_t evaluations_used = 0;
  std::size_t feedback_messages = 0;

  std::vector<double> best_so_far() const;
};

struct OptimizationResult {
  RisConfig config;
  double power_dbm = 0.0;
  OptimizationTrace trace;
};

// Element groups that always share one state. Singletons give the plain
// element-by-element sweep.
using Groups = std::vector<std::vector<std::size_t>>;

Groups singleton_groups(std::size_t n);
// G contiguous groups whose sizes differ by at most one (larger groups first).
Groups contiguous_groups(std::size_t n, std::size_t group_count);

// Resumable coordinate sweep over groups. For each group every state is
// measured with all other elements fixed, and the argmax is kept (ties go to
// the lowest state index). Callers alternate candidate() / report().
class GroupSearch {
 public:
  GroupSearch(Groups groups, std::size_t state_count, RisConfig initial, std::size_t passes,
              bool until_converged);

  bool done() const { return done_; }
  const RisConfig& candidate() const { return candidate_; }
  void report(double power_dbm);

  const RisConfig& best() const { return best_; }
  std::optional<double> best_power_dbm() const { return best_power_; }
  std::size_t evaluations() const { return evaluations_; }
  std::size_t passes_completed() const { return passes_completed_; }
  std::size_t current_group() const { return group_; }
  std::size_t current_state() const { return state_; }

 private:
  void load_candidate();

  Groups groups_;
  std::size_t state_count_;
  std::size_t max_passes_;
  bool until_converged_;

  RisConfig best_;
  RisConfig candidate_;
  std::optional<double> best_power_;
  std::size_t group_ = 0;
  std::size_t state_ = 0;
  std::size_t group_best_state_ = 0;
  double group_best_power_ = 0.0;
  bool pass_changed_ = false;
  std::size_t passes_completed_ = 0;
  std::size_t evaluations_ = 0;
  bool done_ = false;
};

struct IterativeOptions {
  std::size_t passes = 1;
  // Repeat passes until one changes nothing (bounded by max_passes).
  bool until_converged = false;
  std::size_t max_passes = 64;
  std::optional<RisConfig> initial;  // default: all state 0
  bool record_candidates = true;
};

// Element-by-element sweep; evaluations_used = passes * N * |S|.
OptimizationResult iterative_optimize(const Evaluator& evaluator, std::size_t element_count,
                                      std::size_t state_count,
                                      const IterativeOptions& options = {});

// Contiguous-group sweep; evaluations_used = G * |S|.
OptimizationResult grouping_optimize(const Evaluator& evaluator, std::size_t element_count,
                                     std::size_t state_count, std::size_t group_count,
                                     const std::optional<RisConfig>& initial = std::nullopt);

struct ExhaustiveResult {
  RisConfig config;
  double power_dbm = 0.0;
  std::size_t evaluations = 0;
};

inline constexpr std::size_t kExhaustiveLimit = std::size_t{1} << 20;

// True argmax over all |S|^N configurations; ties go to the lexicographically
// smallest. Throws TooLarge above kExhaustiveLimit configurations.
ExhaustiveResult exhaustive_optimize(const Evaluator& evaluator, std::size_t element_count,
                                     std::size_t state_count);

}  // namespace rrs::ris
