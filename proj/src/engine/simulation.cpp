#include "rrs/engine/simulation.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rrs/common/error.hpp"
#include "rrs/ric/builtin_apps.hpp"

namespace rrs::engine {

scenario::Scenario with_seed(scenario::Scenario s, std::optional<std::uint64_t> seed) {
  if (seed) s.seed = *seed;
  return s;
}

Simulation::Simulation(scenario::Scenario s, SimulationOptions options)
    : world_(with_seed(std::move(s), options.seed)), ric_(kernel_) {
  const auto& sc = world_.scenario();
  kernel_.set_handler([this](const sim::Event& e) { handle(e); });

  if (options.builtin_apps) {
    for (auto& app : ric::builtin_apps(sc)) ric_.register_app(std::move(app));
  }
  for (auto& app : options.apps) ric_.register_app(std::move(app));

  for (std::size_t i = 0; i < sc.disasters.size(); ++i) {
    for (auto& e : scenario::inject_disaster(sc, i)) kernel_.schedule(std::move(e));
  }
  for (const auto& t : sc.trajectories) {
    for (const auto& w : t.waypoints) {
      kernel_.schedule({w.at, sim::EventKind::UeMove, sim::UeMovePayload{t.ue, w.position}, std::nullopt});
    }
  }
  kernel_.schedule({sc.ticks.heartbeat, sim::EventKind::HeartbeatDue, sim::HeartbeatPayload{}, std::nullopt});
  kernel_.schedule({sim::kTimeZero, sim::EventKind::MeasurementDone, std::monostate{}, std::nullopt});
}

const sim::MetricsLog& Simulation::run_until(sim::SimTime t_end) { return kernel_.run_until(t_end); }

const ric::Snapshot& Simulation::snapshot(sim::SimTime now) {
  if (!snapshot_ || snapshot_->taken_at != now) snapshot_ = world_.snapshot(now);
  return *snapshot_;
}

void Simulation::log(sim::SimTime time, sim::ActionCategory category, std::string text) {
  spdlog::debug("[{} ms] {}: {}", time.ms, sim::to_string(category), text);
  kernel_.metrics().log_action(time, category, std::move(text));
}

void Simulation::apply(const ric::Action& action) {
  const auto now = action.issued;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ric::DeployPlan>) {
          for (const auto& p : world_.deploy(a.plan, now)) {
            kernel_.schedule({p.ready_at, sim::EventKind::HeartbeatDue, sim::HeartbeatPayload{p.id}, std::nullopt});
          }
        } else if constexpr (std::is_same_v<T, ric::ApplyRisConfig>) {
          world_.apply_ris_config(a.panel, a.part, a.config);
        } else if constexpr (std::is_same_v<T, ric::Recluster>) {
          world_.recluster(a.cluster_size);
        } else if constexpr (std::is_same_v<T, ric::SwitchPolicy>) {
          world_.set_policy(a.policy);
        } else if constexpr (std::is_same_v<T, ric::ReportOutage>) {
          world_.set_outage(a.report);
        }
      },
      action.kind);
  // Later apps firing at the same instant see the effect of this action.
  snapshot_.reset();
}

void Simulation::take_sample(sim::SimTime now) {
  kernel_.metrics().add_sample(world_.sample(now));
}

void Simulation::handle(const sim::Event& event) {
  const auto now = event.fire_time;
  const bool tick = event.kind == sim::EventKind::NonRtTick || event.kind == sim::EventKind::NearRtTick;
  if (!tick) snapshot_.reset();
  switch (event.kind) {
    case sim::EventKind::DisasterStrike: {
      const auto& d = std::get<sim::DisasterPayload>(event.payload);
      log(now, sim::ActionCategory::DisasterStrike, world_.apply_disaster(d.disaster_index, now));
      break;
    }
    case sim::EventKind::BatteryExpiry: {
      const auto& n = std::get<sim::NodePayload>(event.payload);
      if (auto text = world_.expire_battery(n.node_id)) log(now, sim::ActionCategory::BatteryExpiry, *text);
      break;
    }
    case sim::EventKind::HeartbeatDue: {
      const auto& h = std::get<sim::HeartbeatPayload>(event.payload);
      if (h.node_id) {
        if (auto text = world_.activate(*h.node_id, now)) log(now, sim::ActionCategory::NodeActivated, *text);
      } else {
        world_.heartbeat_sweep(now);
        kernel_.schedule({now + world_.scenario().ticks.heartbeat, event.kind, event.payload, std::nullopt});
      }
      break;
    }
    case sim::EventKind::UeMove: {
      const auto& m = std::get<sim::UeMovePayload>(event.payload);
      world_.move_ue(m.ue_id, m.position);
      ric_.dispatch(event, *this);
      break;
    }
    case sim::EventKind::NonRtTick:
    case sim::EventKind::NearRtTick:
      ric_.dispatch(event, *this);
      break;
    case sim::EventKind::MeasurementDone:
      take_sample(now);
      kernel_.schedule({now + world_.scenario().ticks.sample, event.kind, event.payload, std::nullopt});
      break;
  }
}

}  // namespace rrs::engine
