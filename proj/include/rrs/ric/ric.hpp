#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rrs/ric/action.hpp"
#include "rrs/ris/codebook.hpp"
#include "rrs/simcore/kernel.hpp"

namespace rrs::ric {

struct PanelView {
  scenario::NodeId node = 0;
  channel::RisPanel panel;
  channel::RisConfig config;
  bool active = true;
  std::map<std::size_t, scenario::NodeId> part_ue;
  std::map<std::size_t, scenario::NodeId> part_tx;
  std::map<std::size_t, std::shared_ptr<const ris::Codebook>> codebooks;
};

// State of the world as handed to apps; never mutated by them.
struct Snapshot {
  sim::SimTime taken_at;
  ntn::Topology topology;
  std::string policy;
  std::vector<PanelView> panels;
  std::optional<ntn::OutageReport> last_outage;
  std::vector<scenario::NodeId> pending_ues;  // covered by nodes still deploying
  std::size_t deployed_nodes = 0;
  std::size_t cluster_size = 1;
  std::uint64_t inventory_version = 0;  // bumps whenever node statuses change
  std::vector<scenario::PolicyChange> schedule;
};

struct AppContext {
  sim::SimTime now;
  const Snapshot& snapshot;
  const sim::MetricsLog& metrics;
  const sim::Event& trigger;
};

struct Periodic {
  sim::SimTime interval;
};
struct OnEvent {
  sim::EventKind kind;
};
using Trigger = std::variant<Periodic, OnEvent>;

class ControllerApp {
 public:
  virtual ~ControllerApp() = default;
  virtual std::string name() const = 0;
  virtual Tier tier() const = 0;
  virtual Trigger trigger() const = 0;
  virtual std::vector<Action> on_tick(const AppContext& ctx) = 0;
};

// What the RIC needs from the simulation hosting it.
class Host {
 public:
  virtual ~Host() = default;
  virtual const Snapshot& snapshot(sim::SimTime now) = 0;
  virtual const sim::MetricsLog& metrics() const = 0;
  // Throws on an action the world cannot carry out.
  virtual void apply(const Action& action) = 0;
  virtual void log(sim::SimTime time, sim::ActionCategory category, std::string text) = 0;
};

inline constexpr sim::SimTime kMinNonRtInterval{1'000};
inline constexpr sim::SimTime kMinNearRtInterval{10};
inline constexpr sim::SimTime kMaxNearRtInterval{1'000};

class Ric {
 public:
  explicit Ric(sim::Kernel& kernel) : kernel_(kernel) {}

  // Schedules the first tick at now + interval. Throws DuplicateName or
  // InvalidInterval.
  std::size_t register_app(std::unique_ptr<ControllerApp> app);

  // Runs the app(s) an event is addressed to, applying their actions in
  // order. Periodic apps are rescheduled before their handler runs.
  void dispatch(const sim::Event& event, Host& host);

  std::size_t app_count() const { return apps_.size(); }
  const ControllerApp& app(std::size_t i) const { return *apps_.at(i).app; }
  std::optional<std::size_t> find(std::string_view name) const;

 private:
  struct Slot {
    std::unique_ptr<ControllerApp> app;
    Tier tier;
    Trigger trigger;
  };
  void run(std::size_t index, const sim::Event& event, Host& host);

  sim::Kernel& kernel_;
  std::vector<Slot> apps_;
};

}  // namespace rrs::ric
