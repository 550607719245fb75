#include "rrs/channel/cascade.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "rrs/common/error.hpp"
#include "rrs/kernels/complex_kernels.hpp"

namespace rrs::channel {

std::complex<double> segment_gain(Vec3 a, Vec3 b, const LinkModel& model,
                                  std::span<const Box> obstacles) {
  const bool blocked = los_blocked(a, b, obstacles);
  if (blocked && !model.scatter_floor) return {0.0, 0.0};
  const double pl = path_loss_db(a, b, model.freq_hz, model.path_loss, blocked);
  const double phase = -kTwoPi * distance(a, b) / wavelength_m(model.freq_hz);
  return std::polar(std::pow(10.0, -pl / 20.0), phase);
}

CascadeModel::CascadeModel(Vec3 tx, const RisPanel& panel, Vec3 rx, const LinkModel& model,
                           std::span<const Box> obstacles, bool include_direct) {
  const double element_gain = std::pow(10.0, model.element_gain_db / 20.0);
  if (include_direct) direct_ = segment_gain(tx, rx, model, obstacles);
  coeff_re_.reserve(panel.size());
  coeff_im_.reserve(panel.size());
  for (const Vec3& e : panel.elements) {
    const auto b = element_gain * segment_gain(tx, e, model, obstacles) *
                   segment_gain(e, rx, model, obstacles);
    coeff_re_.push_back(b.real());
    coeff_im_.push_back(b.imag());
  }
  for (const auto& s : panel.states) {
    const auto m = s.multiplier();
    state_re_.push_back(m.real());
    state_im_.push_back(m.imag());
  }
}

CascadeModel CascadeModel::from_coefficients(std::complex<double> direct,
                                             std::span<const std::complex<double>> coefficients,
                                             std::span<const RisState> states) {
  CascadeModel m;
  m.direct_ = direct;
  for (const auto& c : coefficients) {
    m.coeff_re_.push_back(c.real());
    m.coeff_im_.push_back(c.imag());
  }
  for (const auto& s : states) {
    const auto v = s.multiplier();
    m.state_re_.push_back(v.real());
    m.state_im_.push_back(v.imag());
  }
  return m;
}

std::complex<double> CascadeModel::gain(const RisConfig& config) const {
  if (config.size() != size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("config has {} states, cascade has {} elements", config.size(), size()));
  }
  thread_local std::vector<double> m_re;
  thread_local std::vector<double> m_im;
  m_re.resize(size());
  m_im.resize(size());
  for (std::size_t k = 0; k < size(); ++k) {
    const auto s = config.states[k];
    if (s >= state_re_.size()) {
      throw Error(ErrorCode::ValidationError,
                  fmt::format("state index {} >= state count {}", s, state_re_.size()));
    }
    m_re[k] = state_re_[s];
    m_im[k] = state_im_[s];
  }
  return direct_ + kernels::complex_dot(coeff_re_, coeff_im_, m_re, m_im);
}

double CascadeModel::received_power_dbm(const RisConfig& config, double tx_power_dbm) const {
  return gain_to_dbm(gain(config), tx_power_dbm);
}

ComplexGain cascaded_gain(Vec3 tx, const RisPanel& panel, const RisConfig& config, Vec3 rx,
                          const LinkModel& model, std::span<const Box> obstacles) {
  panel.check_config(config);
  return ComplexGain::from_complex(CascadeModel(tx, panel, rx, model, obstacles).gain(config));
}

double gain_to_dbm(std::complex<double> gain, double tx_power_dbm) {
  const double p = std::norm(gain);
  if (p <= 0.0) return -std::numeric_limits<double>::infinity();
  return tx_power_dbm + 10.0 * std::log10(p);
}

}  // namespace rrs::channel
