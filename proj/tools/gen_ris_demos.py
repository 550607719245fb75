#!/usr/bin/env python3
"""Generate the two indoor RIS demo scenarios.

Both share one room: a 4 x 19 element panel at the origin facing +x, an
access point at (3, 0, 0) and two wall segments at x = 1.8..2.0 that block
the direct path to receivers on the 1.7 m arc while leaving the panel in
view of both ends.

ris_two_user_demo.json: the panel is split into two row halves, each with a
7-point codebook, and two receivers walk past the reference points at a
small angular offset.

ris_indoor_throughput.json: one receiver, the whole panel tuned by the
iterative xApp one measurement per tick, then a power cut to the panel.
"""
import argparse
import json
import math
import os

FREQ_GHZ = 5.3
ROWS, COLS = 4, 19
PITCH = 0.0283
ARC_R = 1.7
RX1_ANGLES = [-20.0 - 7.5 * i for i in range(7)]
RX2_ANGLES = [20.0 + 7.5 * i for i in range(7)]
TEST_OFFSET_DEG = 3.0
TEST_R = 1.75

WALLS = [
    {"min": [1.8, -3.0, -1.5], "max": [2.0, -0.35, 1.5]},
    {"min": [1.8, 0.35, -1.5], "max": [2.0, 3.0, 1.5]},
]


def arc_point(deg, r):
    a = math.radians(deg)
    return [round(r * math.cos(a), 6), round(r * math.sin(a), 6), 0.0]


def base(name, tx_power_dbm):
    return {
        "name": name,
        "seed": 11,
        "ticks": {"nonrt_ms": 60_000, "nearrt_ms": 100, "sample_ms": 100, "heartbeat_ms": 1_000},
        "channel": {"exponent": 2.0, "d0_m": 1.0, "blockage_penalty_db": 40.0, "air_exponent": 2.0,
                    "bandwidth_hz": 20e6, "noise_figure_db": 7.0, "element_gain_db": 10.0,
                    "scatter_floor": True, "rayleigh_fading": False},
        "cfmimo": {"cluster_size": 1, "realizations": 1},
        "planner": {"snr_threshold_db": 0.0, "max_nodes": 0},
        "traffic": {"data_mbps": 100.0, "voice_mbps": 0.0,
                    "data_surge": [[0, 1.0]], "voice_surge": [[0, 1.0]]},
        "obstacles": WALLS,
        "nodes": [
            {"id": 1, "kind": "TerrestrialBS", "position": [3.0, 0.0, 0.0],
             "tx_power_dbm": tx_power_dbm, "freq_ghz": FREQ_GHZ},
            {"id": 10, "kind": "RisPanel", "position": [0.0, 0.0, 0.0]},
            {"id": 90, "kind": "Gateway", "position": [6.0, 0.0, 2.0]},
        ],
        "panels": [],
    }


def panel(parts, part_ue, codebooks):
    return {"node": 10, "rows": ROWS, "cols": COLS, "pitch_m": PITCH,
            "column_axis": [0.0, 1.0, 0.0], "row_axis": [0.0, 0.0, 1.0],
            "states": "polarization", "cross_pol_amplitude": 0.5,
            "parts": parts, "part_ue": part_ue, "codebooks": codebooks}


def two_user():
    s = base("ris_two_user_demo", 10.0)
    half = ROWS * COLS // 2
    parts = [list(range(half)), list(range(half, ROWS * COLS))]
    s["nodes"] += [
        {"id": 101, "kind": "UE", "position": arc_point(RX1_ANGLES[0] - TEST_OFFSET_DEG, TEST_R)},
        {"id": 102, "kind": "UE", "position": arc_point(RX2_ANGLES[0] + TEST_OFFSET_DEG, TEST_R)},
    ]
    s["panels"] = [panel(parts, [{"part": 0, "ue": 101}, {"part": 1, "ue": 102}],
                         [{"part": 0, "tx": 1, "radius_m": ARC_R, "angles_deg": RX1_ANGLES},
                          {"part": 1, "tx": 1, "radius_m": ARC_R, "angles_deg": RX2_ANGLES}])]
    # One test point per second, each near one reference point.
    s["trajectories"] = [
        {"ue": 101, "waypoints": [{"at_ms": 1000 * (i + 1),
                                   "position": arc_point(a - TEST_OFFSET_DEG, TEST_R)}
                                  for i, a in enumerate(RX1_ANGLES)]},
        {"ue": 102, "waypoints": [{"at_ms": 1000 * (i + 1),
                                   "position": arc_point(a + TEST_OFFSET_DEG, TEST_R)}
                                  for i, a in enumerate(RX2_ANGLES)]},
    ]
    s["ric"] = {"policy": "fast-recovery"}
    return s


def indoor(tx_power_dbm):
    s = base("ris_indoor_throughput", tx_power_dbm)
    s["nodes"].append({"id": 101, "kind": "UE", "position": arc_point(35.0, ARC_R)})
    s["panels"] = [panel([], [{"part": 0, "ue": 101}], [])]
    # 76 elements x 4 states = 304 measurements at 330 ms each: about 100 s.
    s["ric"] = {"policy": "max-throughput", "intervals_ms": {"RisIterativeTuner": 330}}
    s["disasters"] = [{"strike_ms": 150_000, "failed": [10], "power_loss": [], "blockers": []}]
    return s


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", default="scenarios")
    ap.add_argument("--indoor-tx-dbm", type=float, default=-12.0)
    args = ap.parse_args()
    for name, doc in (("ris_two_user_demo.json", two_user()),
                      ("ris_indoor_throughput.json", indoor(args.indoor_tx_dbm))):
        with open(os.path.join(args.out_dir, name), "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")


if __name__ == "__main__":
    main()
