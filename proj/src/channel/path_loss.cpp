#include "rrs/channel/path_loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::channel {

double free_space_db(double distance_m, double freq_hz) {
  return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m / wavelength_m(freq_hz));
}

bool segment_intersects_box(Vec3 a, Vec3 b, const Box& box) {
  // Slab test on the parametric segment a + t (b - a), t in [0, 1].
  double t_enter = 0.0;
  double t_exit = 1.0;
  const double start[3] = {a.x, a.y, a.z};
  const double delta[3] = {b.x - a.x, b.y - a.y, b.z - a.z};
  const double lo[3] = {box.min.x, box.min.y, box.min.z};
  const double hi[3] = {box.max.x, box.max.y, box.max.z};
  for (int axis = 0; axis < 3; ++axis) {
    if (delta[axis] == 0.0) {
      if (start[axis] < lo[axis] || start[axis] > hi[axis]) return false;
      continue;
    }
    double t0 = (lo[axis] - start[axis]) / delta[axis];
    double t1 = (hi[axis] - start[axis]) / delta[axis];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
    if (t_enter > t_exit) return false;
  }
  return true;
}

bool los_blocked(Vec3 tx, Vec3 rx, std::span<const Box> obstacles) {
  return std::any_of(obstacles.begin(), obstacles.end(),
                     [&](const Box& box) { return segment_intersects_box(tx, rx, box); });
}

double path_loss_db(Vec3 tx, Vec3 rx, double freq_hz, const PathLossModel& model, bool blocked) {
  const double d = distance(tx, rx);
  if (d <= std::numeric_limits<double>::min()) {
    throw Error(ErrorCode::ZeroDistance,
                fmt::format("tx and rx coincide at ({}, {}, {})", tx.x, tx.y, tx.z));
  }
  const double pl0 = free_space_db(model.d0_m, freq_hz);
  return pl0 + 10.0 * model.exponent * std::log10(d / model.d0_m) +
         (blocked ? model.blockage_penalty_db : 0.0);
}

double path_loss_db(Vec3 tx, Vec3 rx, double freq_hz, const PathLossModel& model,
                    std::span<const Box> obstacles) {
  return path_loss_db(tx, rx, freq_hz, model, los_blocked(tx, rx, obstacles));
}

}  // namespace rrs::channel
