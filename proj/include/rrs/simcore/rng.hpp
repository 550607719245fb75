#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace rrs::sim {

// Stable 64-bit seed for a named stream. Depends only on (master, label), so
// adding a new stream never shifts the draws of existing ones.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);

// Portable random stream: mt19937_64 is fully specified by the standard, and
// the float conversions below avoid implementation-defined distributions.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}
  RngStream(std::uint64_t master, std::string_view label)
      : engine_(derive_seed(master, label)) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in [0, n).
  std::size_t index(std::size_t n);
  double normal();
  // Circularly-symmetric CN(0, 1).
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace rrs::sim
