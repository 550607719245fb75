#include "rrs/ric/ric.hpp"

#include <exception>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "rrs/common/error.hpp"

namespace rrs::ric {

std::size_t Ric::register_app(std::unique_ptr<ControllerApp> app) {
  const std::string name = app->name();
  if (find(name)) throw Error(ErrorCode::DuplicateName, fmt::format("app '{}' already registered", name));
  const Tier tier = app->tier();
  const Trigger trigger = app->trigger();
  if (const auto* p = std::get_if<Periodic>(&trigger)) {
    const auto iv = p->interval;
    const bool ok = tier == Tier::NonRT
                        ? iv >= kMinNonRtInterval
                        : (iv >= kMinNearRtInterval && iv <= kMaxNearRtInterval);
    if (!ok) {
      throw Error(ErrorCode::InvalidInterval,
                  fmt::format("app '{}' ({}) interval {} ms outside its tier's range", name,
                              to_string(tier), iv.ms));
    }
  }
  const std::size_t index = apps_.size();
  apps_.push_back({std::move(app), tier, trigger});
  if (const auto* p = std::get_if<Periodic>(&trigger)) {
    kernel_.schedule({kernel_.now() + p->interval,
                      tier == Tier::NonRT ? sim::EventKind::NonRtTick : sim::EventKind::NearRtTick,
                      sim::AppTickPayload{index}, std::nullopt});
  }
  return index;
}

std::optional<std::size_t> Ric::find(std::string_view name) const {
  for (std::size_t i = 0; i < apps_.size(); ++i) {
    if (apps_[i].app->name() == name) return i;
  }
  return std::nullopt;
}

void Ric::dispatch(const sim::Event& event, Host& host) {
  if (event.kind == sim::EventKind::NonRtTick || event.kind == sim::EventKind::NearRtTick) {
    const auto& tick = std::get<sim::AppTickPayload>(event.payload);
    const auto& slot = apps_.at(tick.app_index);
    const auto& periodic = std::get<Periodic>(slot.trigger);
    kernel_.schedule({event.fire_time + periodic.interval, event.kind, tick, std::nullopt});
    run(tick.app_index, event, host);
    return;
  }
  for (std::size_t i = 0; i < apps_.size(); ++i) {
    const auto* on = std::get_if<OnEvent>(&apps_[i].trigger);
    if (on && on->kind == event.kind) run(i, event, host);
  }
}

void Ric::run(std::size_t index, const sim::Event& event, Host& host) {
  auto& slot = apps_[index];
  const std::string name = slot.app->name();
  const auto now = event.fire_time;
  std::vector<Action> actions;
  try {
    const AppContext ctx{now, host.snapshot(now), host.metrics(), event};
    actions = slot.app->on_tick(ctx);
  } catch (const std::exception& e) {
    spdlog::warn("app {} failed at {} ms: {}", name, now.ms, e.what());
    host.log(now, sim::ActionCategory::AppError, fmt::format("{} handler failed: {}", name, e.what()));
    return;
  }
  for (auto& action : actions) {
    action.issued = now;
    action.cause = name;
    if (!tier_allows(slot.tier, action.kind)) {
      host.log(now, sim::ActionCategory::AppError,
               fmt::format("{} rejected: {} not permitted for {} apps", name,
                           action_name(action.kind), to_string(slot.tier)));
      continue;
    }
    try {
      host.apply(action);
    } catch (const std::exception& e) {
      host.log(now, sim::ActionCategory::AppError,
               fmt::format("{} action {} failed: {}", name, action_name(action.kind), e.what()));
      continue;
    }
    const auto category = std::holds_alternative<Note>(action.kind) ? sim::ActionCategory::Note
                                                                   : sim::ActionCategory::Controller;
    host.log(now, category, describe(action));
  }
}

}  // namespace rrs::ric
