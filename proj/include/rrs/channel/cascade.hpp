#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rrs/channel/path_loss.hpp"
#include "rrs/channel/ris_panel.hpp"

namespace rrs::channel {

struct LinkModel {
  PathLossModel path_loss;
  double freq_hz = 3.5e9;
  // Aperture gain applied to every element's cascaded term.
  double element_gain_db = 0.0;
  // Blocked segments keep PL + penalty when true, contribute nothing when false.
  bool scatter_floor = true;
};

// Narrowband coefficient of one segment: 10^(-PL/20) * exp(-j 2 pi d / lambda).
std::complex<double> segment_gain(Vec3 a, Vec3 b, const LinkModel& model,
                                  std::span<const Box> obstacles);

// Precomputed tx -> panel -> rx coefficients, so evaluating a configuration
// is one complex dot product:
//   h = h_direct + sum_k b_k * a_{s_k} exp(j theta_{s_k}),  b_k = G_e g_k f_k
class CascadeModel {
 public:
  CascadeModel(Vec3 tx, const RisPanel& panel, Vec3 rx, const LinkModel& model,
               std::span<const Box> obstacles, bool include_direct = true);

  static CascadeModel from_coefficients(std::complex<double> direct,
                                        std::span<const std::complex<double>> coefficients,
                                        std::span<const RisState> states);

  std::size_t size() const { return coeff_re_.size(); }
  std::size_t state_count() const { return state_re_.size(); }
  std::complex<double> direct() const { return direct_; }
  std::complex<double> coefficient(std::size_t k) const { return {coeff_re_[k], coeff_im_[k]}; }

  // Throws LengthMismatch when config.size() != size().
  std::complex<double> gain(const RisConfig& config) const;
  // Received power for a transmitter at tx_power_dbm.
  double received_power_dbm(const RisConfig& config, double tx_power_dbm) const;

 private:
  CascadeModel() = default;

  std::complex<double> direct_{0.0, 0.0};
  std::vector<double> coeff_re_;
  std::vector<double> coeff_im_;
  std::vector<double> state_re_;
  std::vector<double> state_im_;
};

ComplexGain cascaded_gain(Vec3 tx, const RisPanel& panel, const RisConfig& config, Vec3 rx,
                          const LinkModel& model, std::span<const Box> obstacles);

// Power in dBm carried by a channel coefficient; -inf for a zero gain.
double gain_to_dbm(std::complex<double> gain, double tx_power_dbm);

}  // namespace rrs::channel
