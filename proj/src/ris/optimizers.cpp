#include "rrs/ris/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::ris {

namespace {

void check_problem(std::size_t element_count, std::size_t state_count) {
  if (element_count < 1) throw Error(ErrorCode::ValidationError, "need at least one element");
  if (state_count < 2) throw Error(ErrorCode::ValidationError, "need at least two states");
}

double evaluate(const Evaluator& evaluator, const RisConfig& config, std::size_t group,
                std::size_t state) {
  double p = 0.0;
  try {
    p = evaluator(config);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::EvaluatorFailure,
                fmt::format("element/group {} state {}: {}", group, state, e.what()));
  }
  if (std::isnan(p)) {
    throw Error(ErrorCode::EvaluatorFailure,
                fmt::format("element/group {} state {}: evaluator returned NaN", group, state));
  }
  return p;
}

OptimizationResult run_search(const Evaluator& evaluator, GroupSearch search, bool record) {
  OptimizationResult result;
  while (!search.done()) {
    const double p =
        evaluate(evaluator, search.candidate(), search.current_group(), search.current_state());
    if (record) {
      result.trace.entries.push_back({search.evaluations(), search.candidate(), p});
    }
    search.report(p);
  }
  result.config = search.best();
  result.power_dbm = *search.best_power_dbm();
  result.trace.evaluations_used = search.evaluations();
  result.trace.feedback_messages = search.evaluations();
  return result;
}

}  // namespace

std::vector<double> OptimizationTrace::best_so_far() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    out.push_back(out.empty() ? e.power_dbm : std::max(out.back(), e.power_dbm));
  }
  return out;
}

Groups singleton_groups(std::size_t n) {
  Groups g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = {k};
  return g;
}

Groups contiguous_groups(std::size_t n, std::size_t group_count) {
  if (group_count < 1 || group_count > n) {
    throw Error(ErrorCode::ValidationError,
                fmt::format("group count {} outside [1, {}]", group_count, n));
  }
  Groups g(group_count);
  const std::size_t base = n / group_count;
  const std::size_t extra = n % group_count;
  std::size_t next = 0;
  for (std::size_t i = 0; i < group_count; ++i) {
    const std::size_t size = base + (i < extra ? 1 : 0);
    for (std::size_t j = 0; j < size; ++j) g[i].push_back(next++);
  }
  return g;
}

GroupSearch::GroupSearch(Groups groups, std::size_t state_count, RisConfig initial,
                         std::size_t passes, bool until_converged)
    : groups_(std::move(groups)),
      state_count_(state_count),
      max_passes_(passes),
      until_converged_(until_converged),
      best_(std::move(initial)) {
  if (groups_.empty()) throw Error(ErrorCode::ValidationError, "no groups to optimise");
  if (state_count_ < 2) throw Error(ErrorCode::ValidationError, "need at least two states");
  if (max_passes_ < 1) throw Error(ErrorCode::ValidationError, "passes must be >= 1");
  for (const auto& g : groups_) {
    for (auto e : g) {
      if (e >= best_.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    fmt::format("group element {} outside config of size {}", e, best_.size()));
      }
    }
  }
  load_candidate();
}

void GroupSearch::load_candidate() {
  candidate_ = best_;
  for (auto e : groups_[group_]) candidate_.states[e] = static_cast<std::uint32_t>(state_);
}

void GroupSearch::report(double power_dbm) {
  if (done_) throw Error(ErrorCode::ValidationError, "search already finished");
  ++evaluations_;
  if (state_ == 0 || power_dbm > group_best_power_) {
    group_best_power_ = power_dbm;
    group_best_state_ = state_;
  }
  if (++state_ == state_count_) {
    for (auto e : groups_[group_]) {
      if (best_.states[e] != group_best_state_) pass_changed_ = true;
      best_.states[e] = static_cast<std::uint32_t>(group_best_state_);
    }
    best_power_ = group_best_power_;
    state_ = 0;
    if (++group_ == groups_.size()) {
      group_ = 0;
      ++passes_completed_;
      if ((until_converged_ && !pass_changed_) || passes_completed_ >= max_passes_) done_ = true;
      pass_changed_ = false;
    }
  }
  if (!done_) load_candidate();
}

OptimizationResult iterative_optimize(const Evaluator& evaluator, std::size_t element_count,
                                      std::size_t state_count, const IterativeOptions& options) {
  check_problem(element_count, state_count);
  RisConfig initial = options.initial.value_or(RisConfig::zeros(element_count));
  if (initial.size() != element_count) {
    throw Error(ErrorCode::LengthMismatch, "initial config length differs from element count");
  }
  const std::size_t passes = options.until_converged ? options.max_passes : options.passes;
  return run_search(evaluator,
                    GroupSearch(singleton_groups(element_count), state_count, std::move(initial),
                                passes, options.until_converged),
                    options.record_candidates);
}

OptimizationResult grouping_optimize(const Evaluator& evaluator, std::size_t element_count,
                                     std::size_t state_count, std::size_t group_count,
                                     const std::optional<RisConfig>& initial) {
  check_problem(element_count, state_count);
  RisConfig start = initial.value_or(RisConfig::zeros(element_count));
  if (start.size() != element_count) {
    throw Error(ErrorCode::LengthMismatch, "initial config length differs from element count");
  }
  return run_search(evaluator,
                    GroupSearch(contiguous_groups(element_count, group_count), state_count,
                                std::move(start), 1, false),
                    true);
}

ExhaustiveResult exhaustive_optimize(const Evaluator& evaluator, std::size_t element_count,
                                     std::size_t state_count) {
  check_problem(element_count, state_count);
  std::size_t total = 1;
  for (std::size_t i = 0; i < element_count; ++i) {
    if (total > kExhaustiveLimit / state_count) {
      throw Error(ErrorCode::TooLarge,
                  fmt::format("{}^{} configurations exceed the 2^20 guard", state_count,
                              element_count));
    }
    total *= state_count;
  }

  ExhaustiveResult result;
  RisConfig config = RisConfig::zeros(element_count);
  for (std::size_t i = 0; i < total; ++i) {
    const double p = evaluate(evaluator, config, i, 0);
    ++result.evaluations;
    if (i == 0 || p > result.power_dbm) {
      result.power_dbm = p;
      result.config = config;
    }
    // Odometer with the last element fastest: lexicographic order.
    for (std::size_t k = element_count; k-- > 0;) {
      if (++config.states[k] < state_count) break;
      config.states[k] = 0;
    }
  }
  return result;
}

}  // namespace rrs::ris
