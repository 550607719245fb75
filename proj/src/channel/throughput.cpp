#include "rrs/channel/throughput.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rrs/common/error.hpp"

namespace rrs::channel {

McsTable::McsTable(std::vector<McsEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::ValidationError, "MCS table is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].rate_mbps < 0.0) {
      throw Error(ErrorCode::ValidationError, "MCS rates must be non-negative");
    }
    if (i > 0 && (entries_[i].min_snr_db <= entries_[i - 1].min_snr_db ||
                  entries_[i].rate_mbps < entries_[i - 1].rate_mbps)) {
      throw Error(ErrorCode::ValidationError,
                  fmt::format("MCS table not monotone at entry {}", i));
    }
  }
}

McsTable McsTable::default_table() {
  return McsTable({{-6.0, 1.0},
                   {-3.0, 2.0},
                   {0.0, 3.5},
                   {3.0, 5.5},
                   {5.0, 7.5},
                   {7.0, 9.5},
                   {9.0, 12.0},
                   {11.0, 14.5},
                   {13.0, 16.5},
                   {15.0, 18.0},
                   {17.0, 19.5},
                   {19.0, 21.0},
                   {21.0, 24.0},
                   {23.0, 27.0},
                   {25.0, 30.0}});
}

double McsTable::rate_mbps(double snr_db) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), snr_db,
                             [](double s, const McsEntry& e) { return s < e.min_snr_db; });
  if (it == entries_.begin()) return 0.0;
  return std::prev(it)->rate_mbps;
}

double noise_floor_dbm(double bandwidth_hz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

}  // namespace rrs::channel
