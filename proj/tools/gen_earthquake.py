#!/usr/bin/env python3
"""Generate scenarios/earthquake_demo.json.

25 macro BSs on a 5x5 grid (500 m pitch), 200 UEs, one gateway. At the strike
the 10 BSs around the epicentre are destroyed, 8 more lose mains power and
run on battery, and collapsed buildings add blockers.
"""
import argparse
import json
import random

GRID = 5
PITCH = 500.0
UE_COUNT = 200
STRIKE_MS = 630_000


def bs_id(i, j):
    return 1 + i * GRID + j


def build(seed):
    rng = random.Random(seed)
    nodes = []
    for i in range(GRID):
        for j in range(GRID):
            nodes.append({"id": bs_id(i, j), "kind": "TerrestrialBS",
                          "position": [i * PITCH, j * PITCH, 25.0],
                          "tx_power_dbm": 43.0, "freq_ghz": 3.5})
    nodes.append({"id": 90, "kind": "Gateway", "position": [-400.0, -400.0, 30.0]})
    nodes.append({"id": 91, "kind": "Satellite", "position": [1000.0, 1000.0, 550_000.0],
                  "tx_power_dbm": 40.0, "freq_ghz": 2.0})
    lo, hi = -200.0, GRID * PITCH - PITCH + 200.0
    for k in range(UE_COUNT):
        nodes.append({"id": 100 + k, "kind": "UE",
                      "position": [round(rng.uniform(lo, hi), 1), round(rng.uniform(lo, hi), 1), 1.5]})

    failed = [bs_id(i, j) for i in (1, 2, 3) for j in (1, 2, 3)] + [bs_id(2, 4)]
    power_loss = [bs_id(0, 1), bs_id(0, 2), bs_id(0, 3), bs_id(4, 1), bs_id(4, 2), bs_id(4, 3),
                  bs_id(1, 0), bs_id(3, 0)]
    blockers = []
    for _ in range(6):
        cx, cy = rng.uniform(700, 1300), rng.uniform(700, 1300)
        w, d = rng.uniform(20, 60), rng.uniform(20, 60)
        blockers.append({"min": [round(cx - w / 2, 1), round(cy - d / 2, 1), 0.0],
                         "max": [round(cx + w / 2, 1), round(cy + d / 2, 1), 30.0]})

    return {
        "name": "earthquake_demo",
        "seed": 7,
        "battery_reserve_ms": 14_400_000,
        "ticks": {"nonrt_ms": 60_000, "nearrt_ms": 100, "sample_ms": 10_000, "heartbeat_ms": 10_000},
        "channel": {"exponent": 3.0, "d0_m": 1.0, "blockage_penalty_db": 20.0, "air_exponent": 2.2,
                    "bandwidth_hz": 20e6, "noise_figure_db": 7.0, "rayleigh_fading": True},
        "cfmimo": {"cluster_size": 4, "realizations": 20},
        "planner": {"snr_threshold_db": 15.0, "uav_altitude_m": 120.0, "lattice_spacing_m": 250.0,
                    "max_nodes": 6, "uav_tx_power_dbm": 30.0, "uav_freq_ghz": 3.5,
                    "deploy_time_ms": 120_000},
        "ric": {"policy": "fast-recovery"},
        "recovery": {"target_fraction": 0.95, "hold_ms": 10_000},
        "traffic": {"data_mbps": 0.5, "voice_mbps": 0.0125,
                    "data_surge": {"peak": 2.6, "rise_ms": 1_800_000, "plateau_ms": 7_200_000,
                                   "decay_ms": 7_200_000, "floor": 0.6},
                    "voice_surge": {"peak": 91.5, "rise_ms": 1_800_000, "plateau_ms": 7_200_000,
                                    "decay_ms": 7_200_000, "floor": 1.0}},
        "nodes": nodes,
        "obstacles": [],
        "disasters": [{"strike_ms": STRIKE_MS, "failed": failed, "power_loss": power_loss,
                       "blockers": blockers}],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=2023)
    ap.add_argument("--out", default="scenarios/earthquake_demo.json")
    args = ap.parse_args()
    with open(args.out, "w") as f:
        json.dump(build(args.seed), f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
