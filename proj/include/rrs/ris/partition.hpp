#pragma once

#include <memory>
#include <span>
#include <vector>

#include "rrs/channel/cascade.hpp"
#include "rrs/ris/optimizers.hpp"

namespace rrs::ris {

// Disjoint element sets covering the whole panel.
struct Partition {
  std::vector<std::vector<std::size_t>> parts;

  std::size_t element_count() const;
};

// Throws UncoveredElement / Overlap (or ValidationError for out-of-range indices).
Partition make_partition(std::size_t element_count, std::vector<std::vector<std::size_t>> parts);
Partition partition_from_panel(const channel::RisPanel& panel);

// Writes a part-restricted configuration into a full-panel configuration.
RisConfig merge_part(const RisConfig& full, std::span<const std::size_t> elements,
                     const RisConfig& part_config);
RisConfig extract_part(const RisConfig& full, std::span<const std::size_t> elements);

// Received power at one part's UE as a function of that part's states; all
// other elements read their value from the shared panel configuration.
class PartEvaluator {
 public:
  PartEvaluator(std::shared_ptr<const channel::CascadeModel> model,
                std::shared_ptr<RisConfig> panel_config, std::vector<std::size_t> elements,
                double tx_power_dbm);

  double operator()(const RisConfig& part_config) const;
  // Stores the part's states into the shared panel configuration.
  void commit(const RisConfig& part_config) const;

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t state_count() const { return model_->state_count(); }
  // Power with the shared configuration as it stands.
  double current_power_dbm() const;

 private:
  std::shared_ptr<const channel::CascadeModel> model_;
  std::shared_ptr<RisConfig> panel_config_;
  std::vector<std::size_t> elements_;
  double tx_power_dbm_;
};

// One evaluator per part; ue_positions[p] is the receiver served by part p.
std::vector<PartEvaluator> partition_panel(const channel::RisPanel& panel,
                                           const Partition& partition,
                                           std::span<const Vec3> ue_positions, Vec3 tx,
                                           double tx_power_dbm, const channel::LinkModel& model,
                                           std::span<const Box> obstacles,
                                           std::shared_ptr<RisConfig> panel_config);

}  // namespace rrs::ris
