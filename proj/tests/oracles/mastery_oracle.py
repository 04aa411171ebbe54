#!/usr/bin/env python3
"""Independent reimplementation of the mastery update, used to freeze the
expected values in the C++ tests and to cross-check CLI output.

Usage:
  mastery_oracle.py                 print the reference values
  mastery_oracle.py --check CLI DIR run `CLI run passive_curve` and edgeless,
                                    then compare their CSVs to the oracle
"""
import csv
import math
import subprocess
import sys
from pathlib import Path

GAIN = 3.5
DIFFICULTY = 0.6
LOAD = {"passive": 0.5, "active": 0.6, "constructive": 0.7, "interactive": 0.8}
THRESHOLD = 0.8


def logistic(x):
    return 1.0 / (1.0 + math.exp(-x))


def update(m, load, support=0.0):
    return logistic(GAIN * (m + support) - (DIFFICULTY + load))


def isolated_sequence(load, steps):
    m, out = 0.0, []
    for _ in range(steps):
        m = update(m, load)
        out.append(m)
    return out


def steps_to_threshold(load):
    m = 0.0
    for k in range(1, 1000):
        m = update(m, load)
        if m > THRESHOLD:
            return k
    return None


def edgeless_knowledge(load, steps=40, nodes=20):
    """Brute-force single learner on a graph without edges."""
    mastery = [0.0] * nodes
    cursor, series = 0, []
    for _ in range(steps):
        if cursor < nodes:
            mastery[cursor] = update(mastery[cursor], load)
        while cursor < nodes and mastery[cursor] > THRESHOLD:
            cursor += 1
        series.append(sum(1 for m in mastery if m > THRESHOLD))
    return series


def passive_fixed_point():
    lo, hi = 0.5, 1.0  # g(m) = logistic(3.5m - 1.1) - m changes sign here
    for _ in range(200):
        mid = (lo + hi) / 2
        if update(mid, LOAD["passive"]) - mid > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def report():
    print("logistic(-1.1) =", repr(logistic(-1.1)))
    print("passive sequence =", [round(v, 10) for v in isolated_sequence(0.5, 8)])
    print("active example =", repr(update(0.5, LOAD["active"], 1.0 * 0.4)))
    for mode, load in LOAD.items():
        print(mode, "steps-to-threshold =", steps_to_threshold(load),
              "knowledge@40 =", edgeless_knowledge(load)[-1])
        print("  sequence", [round(v, 6) for v in isolated_sequence(load, 12)])
    print("passive fixed point =", repr(passive_fixed_point()))


def check(cli, out_dir):
    out_dir = Path(out_dir)
    for scenario in ("passive_curve", "edgeless"):
        subprocess.run([cli, "run", scenario, "--out", str(out_dir)], check=True,
                       stdout=subprocess.DEVNULL)
    expected = isolated_sequence(LOAD["passive"], 40)
    # Node 0 is practiced until it crosses the threshold, then frozen.
    frozen = next(k for k, m in enumerate(expected) if m > THRESHOLD)
    expected = expected[: frozen + 1] + [expected[frozen]] * (40 - frozen - 1)
    with open(out_dir / "passive_curve_mastery.csv", newline="") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 40, len(rows)
    for row, want in zip(rows, expected):
        got = float(row["mastery"])
        assert abs(got - want) < 1e-3, (row, want)
    with open(out_dir / "edgeless_timeseries.csv", newline="") as f:
        rows = list(csv.DictReader(f))
    for mode, load in LOAD.items():
        want = edgeless_knowledge(load)
        got = [float(r["mean_knowledge"]) for r in rows if r["condition"] == mode]
        assert got == [float(v) for v in want], (mode, got, want)
    print("oracle agrees with CLI output")


if __name__ == "__main__":
    if len(sys.argv) == 4 and sys.argv[1] == "--check":
        check(sys.argv[2], sys.argv[3])
    else:
        report()
