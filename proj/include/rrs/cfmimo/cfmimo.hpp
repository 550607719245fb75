#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rrs/channel/throughput.hpp"
#include "rrs/simcore/rng.hpp"

namespace rrs::cfmimo {

// Large-scale gains between every AP and every UE. AP-major: index m * K + k.
struct GainTable {
  std::vector<std::uint32_t> ap_ids;
  std::vector<std::uint32_t> ue_ids;
  std::vector<double> gain_db;
  std::vector<bool> ap_live;

  std::size_t ap_count() const { return ap_ids.size(); }
  std::size_t ue_count() const { return ue_ids.size(); }
  double at(std::size_t m, std::size_t k) const { return gain_db[m * ue_ids.size() + k]; }
  // Throws DimensionMismatch.
  void check() const;
};

struct ClusterAssignment {
  std::vector<std::uint32_t> ap_ids;
  std::vector<std::uint32_t> ue_ids;
  // Per UE, serving AP indices by descending gain.
  std::vector<std::vector<std::size_t>> serving;

  // Number of UEs each AP serves.
  std::vector<std::size_t> load() const;
  std::vector<std::uint32_t> serving_ids(std::size_t ue_index) const;
  friend bool operator==(const ClusterAssignment&, const ClusterAssignment&) = default;
};

// Top-L live APs per UE; ties go to the lower AP id. Throws NoActiveAps when no
// AP is live, ValidationError for L = 0.
ClusterAssignment cluster(const GainTable& gains, std::size_t cluster_size);

// One coherence block of small-scale channels, AP-major like GainTable.
struct FadingRealization {
  std::size_t ap_count = 0;
  std::size_t ue_count = 0;
  std::vector<double> re;
  std::vector<double> im;

  std::complex<double> at(std::size_t m, std::size_t k) const {
    return {re[m * ue_count + k], im[m * ue_count + k]};
  }
  void set(std::size_t m, std::size_t k, std::complex<double> h) {
    re[m * ue_count + k] = h.real();
    im[m * ue_count + k] = h.imag();
  }
  static FadingRealization zeros(std::size_t ap_count, std::size_t ue_count);
};

// Channel h_mk = beta_mk * x, x ~ CN(0, 1) when rayleigh, else x = 1, where
// beta_mk is the complex large-scale coefficient (AP-major).
FadingRealization draw_fading(std::span<const std::complex<double>> large_scale,
                              std::size_t ap_count, std::size_t ue_count, sim::RngStream& rng,
                              bool rayleigh);

// Maximum-ratio downlink SINR (linear) per UE. Each AP splits ap_power_mw
// equally over the UEs it serves. A UE with an empty cluster gets 0.
// Throws DimensionMismatch.
std::vector<double> sinr(const ClusterAssignment& assignment, const FadingRealization& fading,
                         std::span<const double> ap_power_mw, double noise_mw);

// Linear SINR averaged over `realizations` independent blocks, reduced in
// draw order.
std::vector<double> mean_sinr(const ClusterAssignment& assignment,
                              std::span<const std::complex<double>> large_scale,
                              std::span<const double> ap_power_mw, double noise_mw,
                              std::size_t realizations, sim::RngStream& rng, bool rayleigh);

// delivered_k = min(offered_k, rate(SINR_k) / contention_k), contention the
// largest UE count among the UE's serving APs.
std::vector<double> serve(const ClusterAssignment& assignment, std::span<const double> sinr,
                          std::span<const double> offered_mbps, const channel::McsTable& mcs);

}  // namespace rrs::cfmimo
