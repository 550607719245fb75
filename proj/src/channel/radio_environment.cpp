#include "rrs/channel/radio_environment.hpp"

#include <cmath>

namespace rrs::channel {

LinkModel ChannelParams::link_model(double freq_hz, bool aerial) const {
  LinkModel m;
  m.path_loss = ground;
  if (aerial) m.path_loss.exponent = air_exponent;
  m.freq_hz = freq_hz;
  m.element_gain_db = element_gain_db;
  m.scatter_floor = scatter_floor;
  return m;
}

RadioEnvironment::RadioEnvironment(ChannelParams params, std::vector<Box> obstacles,
                                   std::vector<PanelInstance> panels)
    : params_(std::move(params)), obstacles_(std::move(obstacles)), panels_(std::move(panels)) {}

std::complex<double> RadioEnvironment::gain(const Endpoint& tx, const Endpoint& rx) const {
  const LinkModel model = params_.link_model(tx.freq_hz, tx.aerial || rx.aerial);
  std::complex<double> total = segment_gain(tx.position, rx.position, model, obstacles_);
  for (const auto& inst : panels_) {
    if (!inst.active) continue;
    total += CascadeModel(tx.position, inst.panel, rx.position, model, obstacles_, false)
                 .gain(inst.config);
  }
  return total;
}

LinkSample RadioEnvironment::link(const Endpoint& tx, const Endpoint& rx) const {
  const LinkModel model = params_.link_model(tx.freq_hz, tx.aerial || rx.aerial);
  LinkSample s;
  s.tx = tx.id;
  s.rx = rx.id;
  s.los_blocked = los_blocked(tx.position, rx.position, obstacles_);
  s.path_loss_db = path_loss_db(tx.position, rx.position, tx.freq_hz, model.path_loss,
                                s.los_blocked);
  const auto g = gain(tx, rx);
  s.total_gain = ComplexGain::from_complex(g);
  s.received_power_dbm = gain_to_dbm(g, tx.tx_power_dbm);
  s.snr_db = s.received_power_dbm - params_.noise_floor_dbm();
  return s;
}

double RadioEnvironment::path_loss_snr_db(const Endpoint& tx, const Endpoint& rx) const {
  const LinkModel model = params_.link_model(tx.freq_hz, tx.aerial || rx.aerial);
  const auto g = segment_gain(tx.position, rx.position, model, obstacles_);
  return gain_to_dbm(g, tx.tx_power_dbm) - params_.noise_floor_dbm();
}

}  // namespace rrs::channel
