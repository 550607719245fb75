#pragma once

#include <memory>
#include <optional>

#include "rrs/engine/world.hpp"
#include "rrs/ric/ric.hpp"
#include "rrs/simcore/kernel.hpp"

namespace rrs::engine {

struct SimulationOptions {
  // Overrides scenario.seed when set.
  std::optional<std::uint64_t> seed;
  // Apps beyond or instead of the built-ins; empty uses builtin_apps().
  std::vector<std::unique_ptr<ric::ControllerApp>> apps;
  bool builtin_apps = true;
};

// Kernel, world and RIC wired together for one scenario run.
class Simulation final : public ric::Host {
 public:
  explicit Simulation(scenario::Scenario scenario, SimulationOptions options = {});

  const sim::MetricsLog& run_until(sim::SimTime t_end);

  World& world() { return world_; }
  const World& world() const { return world_; }
  sim::Kernel& kernel() { return kernel_; }
  ric::Ric& ric() { return ric_; }
  std::uint64_t seed() const { return world_.scenario().seed; }

  const ric::Snapshot& snapshot(sim::SimTime now) override;
  const sim::MetricsLog& metrics() const override { return kernel_.metrics(); }
  void apply(const ric::Action& action) override;
  void log(sim::SimTime time, sim::ActionCategory category, std::string text) override;

 private:
  void handle(const sim::Event& event);
  void take_sample(sim::SimTime now);

  sim::Kernel kernel_;
  World world_;
  ric::Ric ric_;
  std::optional<ric::Snapshot> snapshot_;
};

scenario::Scenario with_seed(scenario::Scenario s, std::optional<std::uint64_t> seed);

}  // namespace rrs::engine
