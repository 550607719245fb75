#pragma once

#include <vector>

#include "rrs/simcore/time.hpp"

namespace rrs::scenario {

enum class TrafficClass { Data, Voice };

struct SurgeKnot {
  sim::SimTime since_strike;
  double multiplier = 1.0;

  friend bool operator==(const SurgeKnot&, const SurgeKnot&) = default;
};

// Piecewise-linear multiplier over time since the strike. The first knot sits
// at t = 0; the last value holds afterwards; before the strike it is 1.
struct SurgeCurve {
  std::vector<SurgeKnot> knots;

  double at(std::int64_t ms_since_strike) const;
  void validate() const;

  friend bool operator==(const SurgeCurve&, const SurgeCurve&) = default;
};

// Rise to the peak, plateau, then decay to a post-disaster floor.
struct SurgeShape {
  double peak = 1.0;
  sim::SimTime rise = sim::SimTime::from_minutes(30);
  sim::SimTime plateau = sim::SimTime::from_minutes(120);
  sim::SimTime decay = sim::SimTime::from_minutes(120);
  double floor = 1.0;
};

SurgeCurve make_surge_curve(const SurgeShape& shape);

inline constexpr double kDataSurgePeak = 2.6;
inline constexpr double kVoiceSurgePeak = 91.5;

struct TrafficProfile {
  double data_mbps = 0.5;     // per UE, before any surge
  double voice_mbps = 0.0125;  // per UE, erlang-equivalent
  SurgeCurve data = make_surge_curve({kDataSurgePeak, sim::SimTime::from_minutes(30),
                                      sim::SimTime::from_minutes(120),
                                      sim::SimTime::from_minutes(120), 0.6});
  SurgeCurve voice = make_surge_curve({kVoiceSurgePeak, sim::SimTime::from_minutes(30),
                                       sim::SimTime::from_minutes(120),
                                       sim::SimTime::from_minutes(120), 1.0});

  void validate() const;
  // Offered load of one UE; negative times are pre-disaster.
  double offered_mbps(std::int64_t ms_since_strike) const;

  friend bool operator==(const TrafficProfile&, const TrafficProfile&) = default;
};

double traffic_multiplier(const TrafficProfile& profile, TrafficClass cls,
                          std::int64_t ms_since_strike);

}  // namespace rrs::scenario
