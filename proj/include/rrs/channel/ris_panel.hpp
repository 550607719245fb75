#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rrs/common/geometry.hpp"

namespace rrs::channel {

// Wrapped polar form of a narrowband channel coefficient.
struct ComplexGain {
  double amplitude = 0.0;
  double phase = 0.0;  // [0, 2pi)

  static ComplexGain from_complex(std::complex<double> z);
  std::complex<double> to_complex() const { return std::polar(amplitude, phase); }
  double power() const { return amplitude * amplitude; }
};

// One selectable reflection state of an element.
struct RisState {
  double phase_rad = 0.0;
  double amplitude = 1.0;  // <= 1
  std::string label;

  std::complex<double> multiplier() const { return std::polar(amplitude, phase_rad); }
};

// {H, V} x {0, pi}. The receiver is assumed co-polarised with H, so V states
// reflect with `cross_pol_amplitude`.
std::vector<RisState> polarization_phase_states(double cross_pol_amplitude = 0.5);
// {0, pi} with unit amplitude.
std::vector<RisState> binary_phase_states();

// Per-element state indices into the panel's state set.
struct RisConfig {
  std::vector<std::uint32_t> states;

  static RisConfig zeros(std::size_t n) { return {std::vector<std::uint32_t>(n, 0)}; }
  std::size_t size() const { return states.size(); }
  friend bool operator==(const RisConfig&, const RisConfig&) = default;
  friend auto operator<=>(const RisConfig&, const RisConfig&) = default;
};

struct PanelPose {
  Vec3 center;
  Vec3 column_axis{0.0, 1.0, 0.0};  // direction along a row (column index grows)
  Vec3 row_axis{0.0, 0.0, 1.0};     // direction along a column (row index grows)
};

struct RisPanel {
  std::uint32_t id = 0;
  std::vector<Vec3> elements;
  std::vector<RisState> states;
  // element index -> part id; parts are numbered 0..part_count-1
  std::vector<std::size_t> part_of;

  // rows x cols grid centred on pose.center, element index = row * cols + col.
  static RisPanel planar(std::uint32_t id, const PanelPose& pose, std::size_t rows,
                         std::size_t cols, double pitch_m, std::vector<RisState> states);

  std::size_t size() const { return elements.size(); }
  std::size_t part_count() const;
  std::vector<std::size_t> part_elements(std::size_t part) const;
  // Throws ValidationError on an empty panel, bad partition or amplitude > 1.
  void validate() const;
  // Throws LengthMismatch / ValidationError.
  void check_config(const RisConfig& config) const;
};

}  // namespace rrs::channel
