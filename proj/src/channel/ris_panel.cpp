#include "rrs/channel/ris_panel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::channel {

ComplexGain ComplexGain::from_complex(std::complex<double> z) {
  double phase = std::arg(z);
  if (phase < 0.0) phase += kTwoPi;
  if (phase >= kTwoPi) phase = 0.0;
  return {std::abs(z), phase};
}

std::vector<RisState> polarization_phase_states(double cross_pol_amplitude) {
  const double pi = std::numbers::pi;
  return {{0.0, 1.0, "H/0"},
          {pi, 1.0, "H/180"},
          {0.0, cross_pol_amplitude, "V/0"},
          {pi, cross_pol_amplitude, "V/180"}};
}

std::vector<RisState> binary_phase_states() {
  return {{0.0, 1.0, "0"}, {std::numbers::pi, 1.0, "180"}};
}

RisPanel RisPanel::planar(std::uint32_t id, const PanelPose& pose, std::size_t rows,
                          std::size_t cols, double pitch_m, std::vector<RisState> states) {
  RisPanel panel;
  panel.id = id;
  panel.states = std::move(states);
  const Vec3 u = normalized(pose.column_axis);
  const Vec3 v = normalized(pose.row_axis);
  const double c0 = 0.5 * static_cast<double>(cols - 1);
  const double r0 = 0.5 * static_cast<double>(rows - 1);
  panel.elements.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double du = (static_cast<double>(c) - c0) * pitch_m;
      const double dv = (static_cast<double>(r) - r0) * pitch_m;
      panel.elements.push_back(pose.center + du * u + dv * v);
    }
  }
  panel.part_of.assign(panel.elements.size(), 0);
  return panel;
}

std::size_t RisPanel::part_count() const {
  if (part_of.empty()) return 0;
  return *std::max_element(part_of.begin(), part_of.end()) + 1;
}

std::vector<std::size_t> RisPanel::part_elements(std::size_t part) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < part_of.size(); ++k) {
    if (part_of[k] == part) out.push_back(k);
  }
  return out;
}

void RisPanel::validate() const {
  if (elements.empty()) throw Error(ErrorCode::ValidationError, "RIS panel has no elements");
  if (states.empty()) throw Error(ErrorCode::ValidationError, "RIS panel has no states");
  if (part_of.size() != elements.size()) {
    throw Error(ErrorCode::ValidationError, "every element belongs to exactly one part");
  }
  for (std::size_t p = 0; p < part_count(); ++p) {
    if (part_elements(p).empty()) {
      throw Error(ErrorCode::ValidationError, fmt::format("RIS part {} has no elements", p));
    }
  }
  for (const auto& s : states) {
    if (!(s.amplitude >= 0.0 && s.amplitude <= 1.0)) {
      throw Error(ErrorCode::ValidationError,
                  fmt::format("RIS state '{}' amplitude {} outside [0,1]", s.label, s.amplitude));
    }
  }
}

void RisPanel::check_config(const RisConfig& config) const {
  if (config.size() != size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("config has {} states, panel has {} elements", config.size(), size()));
  }
  for (auto s : config.states) {
    if (s >= states.size()) {
      throw Error(ErrorCode::ValidationError,
                  fmt::format("state index {} >= state count {}", s, states.size()));
    }
  }
}

}  // namespace rrs::channel
