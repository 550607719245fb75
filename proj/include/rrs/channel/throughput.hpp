#pragma once

#include <vector>

namespace rrs::channel {

struct McsEntry {
  double min_snr_db = 0.0;
  double rate_mbps = 0.0;

  friend bool operator==(const McsEntry&, const McsEntry&) = default;
};

// Staircase SNR -> rate map. Entries sorted by strictly increasing SNR with
// non-decreasing rates; the last entry is the cap.
class McsTable {
 public:
  explicit McsTable(std::vector<McsEntry> entries);

  // 20 MHz adaptive-MCS staircase, capped at 30 Mbps.
  static McsTable default_table();

  double rate_mbps(double snr_db) const;
  double max_rate_mbps() const { return entries_.back().rate_mbps; }
  double min_snr_db() const { return entries_.front().min_snr_db; }
  const std::vector<McsEntry>& entries() const { return entries_; }

  friend bool operator==(const McsTable&, const McsTable&) = default;

 private:
  std::vector<McsEntry> entries_;
};

inline double throughput_mbps(double snr_db, const McsTable& table) {
  return table.rate_mbps(snr_db);
}

// Thermal floor: -174 dBm/Hz + 10 log10(B) + NF.
double noise_floor_dbm(double bandwidth_hz, double noise_figure_db);

}  // namespace rrs::channel
