#include "rrs/ris/partition.hpp"

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::ris {

std::size_t Partition::element_count() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  return n;
}

Partition make_partition(std::size_t element_count,
                         std::vector<std::vector<std::size_t>> parts) {
  std::vector<int> owner(element_count, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (auto e : parts[p]) {
      if (e >= element_count) {
        throw Error(ErrorCode::ValidationError,
                    fmt::format("part {} lists element {} of a {}-element panel", p, e,
                                element_count));
      }
      if (owner[e] >= 0) {
        throw Error(ErrorCode::Overlap,
                    fmt::format("element {} in parts {} and {}", e, owner[e], p));
      }
      owner[e] = static_cast<int>(p);
    }
  }
  for (std::size_t e = 0; e < element_count; ++e) {
    if (owner[e] < 0) {
      throw Error(ErrorCode::UncoveredElement, fmt::format("element {} belongs to no part", e));
    }
  }
  return Partition{std::move(parts)};
}

Partition partition_from_panel(const channel::RisPanel& panel) {
  std::vector<std::vector<std::size_t>> parts(panel.part_count());
  for (std::size_t p = 0; p < parts.size(); ++p) parts[p] = panel.part_elements(p);
  return make_partition(panel.size(), std::move(parts));
}

RisConfig merge_part(const RisConfig& full, std::span<const std::size_t> elements,
                     const RisConfig& part_config) {
  if (part_config.size() != elements.size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("part config has {} states for {} elements", part_config.size(),
                            elements.size()));
  }
  RisConfig out = full;
  for (std::size_t i = 0; i < elements.size(); ++i) out.states.at(elements[i]) = part_config.states[i];
  return out;
}

RisConfig extract_part(const RisConfig& full, std::span<const std::size_t> elements) {
  RisConfig out;
  out.states.reserve(elements.size());
  for (auto e : elements) out.states.push_back(full.states.at(e));
  return out;
}

PartEvaluator::PartEvaluator(std::shared_ptr<const channel::CascadeModel> model,
                             std::shared_ptr<RisConfig> panel_config,
                             std::vector<std::size_t> elements, double tx_power_dbm)
    : model_(std::move(model)),
      panel_config_(std::move(panel_config)),
      elements_(std::move(elements)),
      tx_power_dbm_(tx_power_dbm) {}

double PartEvaluator::operator()(const RisConfig& part_config) const {
  return model_->received_power_dbm(merge_part(*panel_config_, elements_, part_config),
                                    tx_power_dbm_);
}

void PartEvaluator::commit(const RisConfig& part_config) const {
  *panel_config_ = merge_part(*panel_config_, elements_, part_config);
}

double PartEvaluator::current_power_dbm() const {
  return model_->received_power_dbm(*panel_config_, tx_power_dbm_);
}

std::vector<PartEvaluator> partition_panel(const channel::RisPanel& panel,
                                           const Partition& partition,
                                           std::span<const Vec3> ue_positions, Vec3 tx,
                                           double tx_power_dbm, const channel::LinkModel& model,
                                           std::span<const Box> obstacles,
                                           std::shared_ptr<RisConfig> panel_config) {
  // Re-validate: callers may hand-build a Partition.
  make_partition(panel.size(), partition.parts);
  if (ue_positions.size() != partition.parts.size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("{} parts but {} UE positions", partition.parts.size(),
                            ue_positions.size()));
  }
  panel.check_config(*panel_config);
  std::vector<PartEvaluator> out;
  for (std::size_t p = 0; p < partition.parts.size(); ++p) {
    auto cascade = std::make_shared<const channel::CascadeModel>(tx, panel, ue_positions[p], model,
                                                                 obstacles);
    out.emplace_back(std::move(cascade), panel_config, partition.parts[p], tx_power_dbm);
  }
  return out;
}

}  // namespace rrs::ris
