#pragma once

#include <span>

#include "rrs/common/geometry.hpp"

namespace rrs::channel {

struct PathLossModel {
  double exponent = 2.0;
  double d0_m = 1.0;
  double blockage_penalty_db = 20.0;
};

// Friis free-space loss at distance d.
double free_space_db(double distance_m, double freq_hz);

// True iff the closed segment tx->rx touches any closed box.
bool los_blocked(Vec3 tx, Vec3 rx, std::span<const Box> obstacles);
bool segment_intersects_box(Vec3 a, Vec3 b, const Box& box);

// Log-distance loss anchored at free space at d0:
//   PL0 + 10 n log10(d / d0) + penalty * blocked
// Throws ZeroDistance when tx and rx coincide.
double path_loss_db(Vec3 tx, Vec3 rx, double freq_hz, const PathLossModel& model, bool blocked);
double path_loss_db(Vec3 tx, Vec3 rx, double freq_hz, const PathLossModel& model,
                    std::span<const Box> obstacles);

}  // namespace rrs::channel
