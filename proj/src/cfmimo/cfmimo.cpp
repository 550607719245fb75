#include "rrs/cfmimo/cfmimo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "rrs/common/error.hpp"
#include "rrs/kernels/complex_kernels.hpp"

namespace rrs::cfmimo {

void GainTable::check() const {
  if (gain_db.size() != ap_ids.size() * ue_ids.size() || ap_live.size() != ap_ids.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("gain table {}x{} with {} gains and {} liveness flags", ap_ids.size(),
                            ue_ids.size(), gain_db.size(), ap_live.size()));
  }
}

std::vector<std::size_t> ClusterAssignment::load() const {
  std::vector<std::size_t> out(ap_ids.size(), 0);
  for (const auto& s : serving) {
    for (auto m : s) ++out[m];
  }
  return out;
}

std::vector<std::uint32_t> ClusterAssignment::serving_ids(std::size_t ue_index) const {
  std::vector<std::uint32_t> out;
  for (auto m : serving.at(ue_index)) out.push_back(ap_ids[m]);
  return out;
}

ClusterAssignment cluster(const GainTable& gains, std::size_t cluster_size) {
  gains.check();
  if (cluster_size == 0) throw Error(ErrorCode::ValidationError, "cluster size must be >= 1");
  std::vector<std::size_t> live;
  for (std::size_t m = 0; m < gains.ap_count(); ++m) {
    if (gains.ap_live[m]) live.push_back(m);
  }
  if (live.empty()) throw Error(ErrorCode::NoActiveAps, "no live access point to cluster");

  ClusterAssignment out{gains.ap_ids, gains.ue_ids, {}};
  out.serving.resize(gains.ue_count());
  const std::size_t take = std::min(cluster_size, live.size());
  for (std::size_t k = 0; k < gains.ue_count(); ++k) {
    auto order = live;
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        const double ga = gains.at(a, k);
                        const double gb = gains.at(b, k);
                        if (ga != gb) return ga > gb;
                        return gains.ap_ids[a] < gains.ap_ids[b];
                      });
    order.resize(take);
    out.serving[k] = std::move(order);
  }
  return out;
}

FadingRealization FadingRealization::zeros(std::size_t ap_count, std::size_t ue_count) {
  return {ap_count, ue_count, std::vector<double>(ap_count * ue_count, 0.0),
          std::vector<double>(ap_count * ue_count, 0.0)};
}

FadingRealization draw_fading(std::span<const std::complex<double>> large_scale,
                              std::size_t ap_count, std::size_t ue_count, sim::RngStream& rng,
                              bool rayleigh) {
  if (large_scale.size() != ap_count * ue_count) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} large-scale coefficients for {}x{}", large_scale.size(), ap_count,
                            ue_count));
  }
  auto f = FadingRealization::zeros(ap_count, ue_count);
  for (std::size_t i = 0; i < large_scale.size(); ++i) {
    const auto h = rayleigh ? large_scale[i] * rng.complex_normal() : large_scale[i];
    f.re[i] = h.real();
    f.im[i] = h.imag();
  }
  return f;
}

std::vector<double> sinr(const ClusterAssignment& assignment, const FadingRealization& fading,
                         std::span<const double> ap_power_mw, double noise_mw) {
  const std::size_t M = assignment.ap_ids.size();
  const std::size_t K = assignment.ue_ids.size();
  if (fading.ap_count != M || fading.ue_count != K || fading.re.size() != M * K ||
      fading.im.size() != M * K || ap_power_mw.size() != M || assignment.serving.size() != K) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("assignment {}x{}, fading {}x{}, {} AP powers", M, K,
                            fading.ap_count, fading.ue_count, ap_power_mw.size()));
  }
  const auto load = assignment.load();
  std::vector<double> per_ue_power(M, 0.0);
  for (std::size_t m = 0; m < M; ++m) {
    if (load[m] > 0) per_ue_power[m] = ap_power_mw[m] / static_cast<double>(load[m]);
  }

  std::vector<double> numerator(K, 0.0);
  std::vector<double> interference(K, 0.0);
  std::vector<double> y_re(K);
  std::vector<double> y_im(K);
  for (std::size_t i = 0; i < K; ++i) {
    std::fill(y_re.begin(), y_re.end(), 0.0);
    std::fill(y_im.begin(), y_im.end(), 0.0);
    for (auto m : assignment.serving[i]) {
      if (m >= M) throw Error(ErrorCode::DimensionMismatch, fmt::format("AP index {} >= {}", m, M));
      const auto h = fading.at(m, i);
      const double mag = std::abs(h);
      if (mag == 0.0) continue;
      // Row m of the channel, weighted by UE i's MR precoder at AP m.
      const auto c = std::sqrt(per_ue_power[m]) * std::conj(h) / mag;
      kernels::complex_axpy(c, std::span(fading.re).subspan(m * K, K),
                            std::span(fading.im).subspan(m * K, K), y_re, y_im);
    }
    numerator[i] = y_re[i] * y_re[i] + y_im[i] * y_im[i];
    y_re[i] = 0.0;
    y_im[i] = 0.0;
    kernels::accumulate_norm_sq(y_re, y_im, interference);
  }

  std::vector<double> out(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    if (assignment.serving[k].empty()) continue;
    const double denom = interference[k] + noise_mw;
    out[k] = denom > 0.0 ? numerator[k] / denom : std::numeric_limits<double>::infinity();
  }
  return out;
}

std::vector<double> mean_sinr(const ClusterAssignment& assignment,
                              std::span<const std::complex<double>> large_scale,
                              std::span<const double> ap_power_mw, double noise_mw,
                              std::size_t realizations, sim::RngStream& rng, bool rayleigh) {
  const std::size_t M = assignment.ap_ids.size();
  const std::size_t K = assignment.ue_ids.size();
  const std::size_t blocks = rayleigh ? std::max<std::size_t>(1, realizations) : 1;
  std::vector<double> acc(K, 0.0);
  for (std::size_t r = 0; r < blocks; ++r) {
    const auto fading = draw_fading(large_scale, M, K, rng, rayleigh);
    const auto s = sinr(assignment, fading, ap_power_mw, noise_mw);
    for (std::size_t k = 0; k < K; ++k) acc[k] += s[k];
  }
  for (auto& v : acc) v /= static_cast<double>(blocks);
  return acc;
}

std::vector<double> serve(const ClusterAssignment& assignment, std::span<const double> sinr,
                          std::span<const double> offered_mbps, const channel::McsTable& mcs) {
  const std::size_t K = assignment.ue_ids.size();
  if (sinr.size() != K || offered_mbps.size() != K || assignment.serving.size() != K) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} UEs, {} SINR values, {} offered loads", K, sinr.size(),
                            offered_mbps.size()));
  }
  const auto load = assignment.load();
  std::vector<double> out(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    if (offered_mbps[k] <= 0.0 || assignment.serving[k].empty() || !(sinr[k] > 0.0)) continue;
    std::size_t contention = 1;
    for (auto m : assignment.serving[k]) contention = std::max(contention, load[m]);
    const double rate = mcs.rate_mbps(10.0 * std::log10(sinr[k]));
    out[k] = std::min(offered_mbps[k], rate / static_cast<double>(contention));
  }
  return out;
}

}  // namespace rrs::cfmimo
