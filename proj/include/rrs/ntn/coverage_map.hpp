#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rrs/ntn/topology.hpp"

namespace rrs::ntn {

struct GridSpec {
  Vec3 origin;  // lower-left corner; z is the evaluation height
  double cell_m = 50.0;
  std::size_t nx = 1;
  std::size_t ny = 1;

  // Throws ValidationError.
  void validate() const;
  Vec3 cell_center(std::size_t ix, std::size_t iy) const;
  // Cell holding a point; nullopt outside the grid.
  std::optional<std::size_t> cell_of(Vec3 p) const;
};

// Smallest grid at `cell_m` resolution holding every point.
GridSpec grid_covering(std::span<const Vec3> points, double cell_m, double height_m);

struct CoverageMap {
  GridSpec grid;
  std::vector<double> best_snr_db;              // row-major, iy * nx + ix
  std::vector<std::optional<NodeId>> best_node;  // empty where nothing reaches

  double snr_at(Vec3 p) const;
};

CoverageMap coverage_map(const Topology& topology, const GridSpec& grid);

}  // namespace rrs::ntn
