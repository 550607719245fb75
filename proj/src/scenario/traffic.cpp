#include "rrs/scenario/traffic.hpp"

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::scenario {

double SurgeCurve::at(std::int64_t ms_since_strike) const {
  if (ms_since_strike < 0 || knots.empty()) return 1.0;
  if (ms_since_strike >= knots.back().since_strike.ms) return knots.back().multiplier;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const auto& a = knots[i - 1];
    const auto& b = knots[i];
    if (ms_since_strike < b.since_strike.ms) {
      const double f = static_cast<double>(ms_since_strike - a.since_strike.ms) /
                       static_cast<double>(b.since_strike.ms - a.since_strike.ms);
      return a.multiplier + f * (b.multiplier - a.multiplier);
    }
  }
  return knots.back().multiplier;
}

void SurgeCurve::validate() const {
  if (knots.empty()) throw Error(ErrorCode::ValidationError, "surge curve has no knots");
  if (knots.front().since_strike.ms != 0) {
    throw Error(ErrorCode::ValidationError, "surge curve must start at t = 0");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i].multiplier < 0.0) {
      throw Error(ErrorCode::ValidationError, "surge multipliers must be >= 0");
    }
    if (i > 0 && knots[i].since_strike <= knots[i - 1].since_strike) {
      throw Error(ErrorCode::ValidationError,
                  fmt::format("surge knot {} not after knot {}", i, i - 1));
    }
  }
}

SurgeCurve make_surge_curve(const SurgeShape& s) {
  const sim::SimTime peak_at = s.rise;
  const sim::SimTime plateau_end = peak_at + s.plateau;
  const sim::SimTime floor_at = plateau_end + s.decay;
  return SurgeCurve{{{sim::kTimeZero, 1.0},
                     {peak_at, s.peak},
                     {plateau_end, s.peak},
                     {floor_at, s.floor}}};
}

void TrafficProfile::validate() const {
  if (data_mbps < 0.0 || voice_mbps < 0.0) {
    throw Error(ErrorCode::ValidationError, "base traffic loads must be >= 0");
  }
  data.validate();
  voice.validate();
}

double TrafficProfile::offered_mbps(std::int64_t ms_since_strike) const {
  return data_mbps * data.at(ms_since_strike) + voice_mbps * voice.at(ms_since_strike);
}

double traffic_multiplier(const TrafficProfile& profile, TrafficClass cls,
                          std::int64_t ms_since_strike) {
  return cls == TrafficClass::Data ? profile.data.at(ms_since_strike)
                                   : profile.voice.at(ms_since_strike);
}

}  // namespace rrs::scenario
