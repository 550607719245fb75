#include "rrs/ntn/coverage_map.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "rrs/common/error.hpp"
#include "rrs/ntn/outage.hpp"

namespace rrs::ntn {

void GridSpec::validate() const {
  if (!(cell_m > 0.0) || nx == 0 || ny == 0) {
    throw Error(ErrorCode::ValidationError,
                fmt::format("grid needs cell > 0 and dimensions >= 1 (cell {}, {}x{})", cell_m, nx, ny));
  }
}

Vec3 GridSpec::cell_center(std::size_t ix, std::size_t iy) const {
  return {origin.x + (static_cast<double>(ix) + 0.5) * cell_m,
          origin.y + (static_cast<double>(iy) + 0.5) * cell_m, origin.z};
}

std::optional<std::size_t> GridSpec::cell_of(Vec3 p) const {
  const double fx = std::floor((p.x - origin.x) / cell_m);
  const double fy = std::floor((p.y - origin.y) / cell_m);
  if (fx < 0.0 || fy < 0.0 || fx >= static_cast<double>(nx) || fy >= static_cast<double>(ny)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(fy) * nx + static_cast<std::size_t>(fx);
}

GridSpec grid_covering(std::span<const Vec3> points, double cell_m, double height_m) {
  GridSpec g;
  g.cell_m = cell_m;
  if (points.empty()) {
    g.origin = {0.0, 0.0, height_m};
    return g;
  }
  double x0 = points[0].x, y0 = points[0].y, x1 = x0, y1 = y0;
  for (const auto& p : points) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  g.origin = {std::floor(x0 / cell_m) * cell_m, std::floor(y0 / cell_m) * cell_m, height_m};
  g.nx = static_cast<std::size_t>(std::floor((x1 - g.origin.x) / cell_m)) + 1;
  g.ny = static_cast<std::size_t>(std::floor((y1 - g.origin.y) / cell_m)) + 1;
  return g;
}

double CoverageMap::snr_at(Vec3 p) const {
  const auto c = grid.cell_of(p);
  return c ? best_snr_db[*c] : -std::numeric_limits<double>::infinity();
}

CoverageMap coverage_map(const Topology& topology, const GridSpec& grid) {
  grid.validate();
  CoverageMap m;
  m.grid = grid;
  m.best_snr_db.assign(grid.nx * grid.ny, -std::numeric_limits<double>::infinity());
  m.best_node.assign(grid.nx * grid.ny, std::nullopt);
  const auto env = topology.environment();
  for (std::size_t iy = 0; iy < grid.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const std::size_t c = iy * grid.nx + ix;
      const Vec3 p = grid.cell_center(ix, iy);
      for (const auto& n : topology.nodes) {
        if (!n.is_access() || !topology.operational(n)) continue;
        const double snr = access_snr_db(env, n, p);
        if (snr > m.best_snr_db[c]) {
          m.best_snr_db[c] = snr;
          m.best_node[c] = n.id;
        }
      }
    }
  }
  return m;
}

}  // namespace rrs::ntn
