#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rrs/ric/ric.hpp"

namespace rrs::ric {

// Names in registration order.
std::vector<std::string> builtin_app_names();

// Throws ValidationError for an unknown name. Intervals come from
// ric.intervals, falling back to the scenario's tier ticks.
std::unique_ptr<ControllerApp> make_builtin_app(const std::string& name,
                                                const scenario::Scenario& scenario);

// ric.apps (all built-ins when empty) minus ric.disabled.
std::vector<std::unique_ptr<ControllerApp>> builtin_apps(const scenario::Scenario& scenario);

// Received power at a part's UE for a candidate part configuration, measured
// on the snapshot's radio model.
double part_power_dbm(const Snapshot& snapshot, std::size_t panel_index, std::size_t part,
                      const channel::RisConfig& part_config, scenario::NodeId tx,
                      scenario::NodeId ue);
// Tx serving a panel part: the configured one, else the strongest operational
// access node at the UE. nullopt when nothing is up.
std::optional<scenario::NodeId> part_transmitter(const Snapshot& snapshot,
                                                 const PanelView& panel, std::size_t part);

}  // namespace rrs::ric
