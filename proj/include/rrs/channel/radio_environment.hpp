#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rrs/channel/cascade.hpp"
#include "rrs/channel/throughput.hpp"

namespace rrs::channel {

struct ChannelParams {
  PathLossModel ground{3.0, 1.0, 20.0};
  // Exponent for links with an aerial endpoint; d0 and penalty are shared.
  double air_exponent = 2.2;
  double bandwidth_hz = 20e6;
  double noise_figure_db = 7.0;
  double element_gain_db = 0.0;
  bool scatter_floor = true;
  bool rayleigh_fading = false;
  McsTable mcs = McsTable::default_table();

  double noise_floor_dbm() const { return channel::noise_floor_dbm(bandwidth_hz, noise_figure_db); }
  LinkModel link_model(double freq_hz, bool aerial) const;
};

struct Endpoint {
  std::uint32_t id = 0;
  Vec3 position;
  double freq_hz = 3.5e9;
  double tx_power_dbm = 0.0;
  bool aerial = false;
};

struct LinkSample {
  std::uint32_t tx = 0;
  std::uint32_t rx = 0;
  double path_loss_db = 0.0;  // direct path, including any blockage penalty
  bool los_blocked = false;
  ComplexGain total_gain;
  double received_power_dbm = 0.0;
  double snr_db = 0.0;
};

struct PanelInstance {
  RisPanel panel;
  RisConfig config;
  bool active = true;
};

// Large-scale radio picture of one instant: obstacles plus RIS panels in
// their current configuration.
class RadioEnvironment {
 public:
  RadioEnvironment(ChannelParams params, std::vector<Box> obstacles,
                   std::vector<PanelInstance> panels = {});

  const ChannelParams& params() const { return params_; }
  const std::vector<Box>& obstacles() const { return obstacles_; }
  const std::vector<PanelInstance>& panels() const { return panels_; }
  std::vector<PanelInstance>& panels() { return panels_; }

  // Direct path plus every active panel's cascade.
  std::complex<double> gain(const Endpoint& tx, const Endpoint& rx) const;
  LinkSample link(const Endpoint& tx, const Endpoint& rx) const;
  // Large-scale SNR from path loss only (no RIS), as used for coverage planning.
  double path_loss_snr_db(const Endpoint& tx, const Endpoint& rx) const;

 private:
  ChannelParams params_;
  std::vector<Box> obstacles_;
  std::vector<PanelInstance> panels_;
};

}  // namespace rrs::channel
