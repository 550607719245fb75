#pragma once

#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "rrs/common/error.hpp"
#include "rrs/scenario/scenario.hpp"

namespace rrs::test {

inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no rrs::Error thrown";
  return ErrorCode::Io;
}

inline std::string source_path(const std::string& rel) { return std::string(RRS_SOURCE_DIR) + "/" + rel; }

// Two BSs 1 km apart with UEs spread between them, one gateway and a strike
// that destroys BS 2.
inline const char* kSmallScenario = R"({
  "name": "small",
  "seed": 3,
  "ticks": {"nonrt_ms": 60000, "nearrt_ms": 100, "sample_ms": 1000, "heartbeat_ms": 10000},
  "channel": {"exponent": 3.0, "rayleigh_fading": false},
  "cfmimo": {"cluster_size": 2, "realizations": 1},
  "planner": {"snr_threshold_db": 10.0, "lattice_spacing_m": 200.0, "max_nodes": 3,
              "area": {"min": [0, -200, 0], "max": [1000, 200, 0]}},
  "nodes": [
    {"id": 1, "kind": "TerrestrialBS", "position": [0, 0, 25], "tx_power_dbm": 43},
    {"id": 2, "kind": "TerrestrialBS", "position": [1000, 0, 25], "tx_power_dbm": 43},
    {"id": 9, "kind": "Gateway", "position": [-100, 0, 30]},
    {"id": 10, "kind": "UE", "position": [50, 20, 1.5]},
    {"id": 11, "kind": "UE", "position": [200, -30, 1.5]},
    {"id": 12, "kind": "UE", "position": [800, 10, 1.5]},
    {"id": 13, "kind": "UE", "position": [950, -40, 1.5]}
  ],
  "disasters": [{"strike_ms": 30000, "failed": [2], "power_loss": [1], "blockers": []}]
})";

inline scenario::Scenario small_scenario() { return scenario::scenario_from_json_text(kSmallScenario, "small"); }

}  // namespace rrs::test
