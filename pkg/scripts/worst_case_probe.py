#!/usr/bin/env python3
"""Desk-scale probe of the doubly-exponential binomial tower.

Level 1 is fully computable: basis degrees, the minimal resolution and its
regularity, and the reachability threshold for the counter relations.
Level 2 is where the blowup starts; the probe runs its basis under a degree
cap so the run stays bounded, and reports how far it got.

    python scripts/worst_case_probe.py [--level2-cap 6]
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from groebner import GF, buchberger, free_resolution, mayr_meyer, membership, regularity
from groebner.buchberger import BuchbergerOptions


def level_one():
    print("== level 1 ==")
    ring, gens = mayr_meyer(1, field=GF(32003))
    print(f"affine: {ring.nvars} variables, {len(gens)} generators")

    S, F = ring.variable("S1"), ring.variable("F1")
    C, B = ring.variable("C1_1"), ring.variable("B1_1")
    for e in (1, 2, 3, 4):
        member = membership(S * C - F * C * B ** e, gens).member
        print(f"  S*C1 - F*C1*B1^{e} in the ideal: {member}")

    hring, hgens = mayr_meyer(1, homogeneous=True, field=GF(32003))
    t0 = time.time()
    gb = buchberger(hgens)
    print(f"homogenized basis: {len(gb.elements)} elements, max degree {gb.max_degree()}"
          f" ({time.time() - t0:.2f}s)")
    t0 = time.time()
    res = free_resolution(hgens)
    print("Betti table:")
    print(res.betti().ascii())
    print(f"regularity {regularity(res)} vs generator degree 4 ({time.time() - t0:.2f}s)")


def level_two(cap):
    print(f"\n== level 2 (degree cap {cap}) ==")
    hring, hgens = mayr_meyer(2, homogeneous=True, field=GF(32003))
    print(f"{hring.nvars} variables, {len(hgens)} generators")
    t0 = time.time()
    gb = buchberger(hgens, opts=BuchbergerOptions(degree_cap=cap))
    status = "complete" if gb.complete else "truncated"
    print(f"basis through the cap: {len(gb.elements)} elements, "
          f"max degree {gb.max_degree()}, {status} ({time.time() - t0:.2f}s)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--level2-cap", type=int, default=6)
    args = ap.parse_args()
    level_one()
    level_two(args.level2_cap)


if __name__ == "__main__":
    main()
