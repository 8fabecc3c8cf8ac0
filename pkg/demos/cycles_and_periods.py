"""Periodic orbits: Newton multistart on the cycle equations, and period
detection on long orbits.

Run with ``python3 demos/cycles_and_periods.py`` (a few seconds).
"""

import numpy as np

from holomap import MapSpec, iterate
from holomap.cases import COMPARISON_CASES
from holomap.cycles import CycleSystem, detect_period, find_cycles, newton_multistart

unit = MapSpec("E1", 1, 1)

# Cycles of E1 with alpha = beta = 1. Each cycle is reported once, up to rotation.
for d in (2, 4, 5, 6, 7):
    cycles = find_cycles(CycleSystem(unit, d), starts=400, seed=0)
    print(f"period {d}: {len(cycles)} cycles")
    for c in cycles[:2]:
        pts = " ".join(f"{z + 0:.5f}" for z in c.points + 0j)
        print(f"   {pts}   |multipliers| = {c.multiplier_moduli[0]:.3g}, {c.multiplier_moduli[1]:.3g}")

# Period 3 for E1 and period 4 for E8 turn up nothing but equilibria.
for kind, d in (("E1", 3), ("E8", 4)):
    res = newton_multistart(CycleSystem(MapSpec(kind, 1, 1), d), starts=500, seed=0)
    print(f"{kind} period {d}: {len(res.cycles)} cycles, {res.equilibrium_hits} starts fell onto equilibria")

# A long attracting cycle. With z_n and z_(n-1) swapped on the right-hand side,
# this parameter set settles onto a 24-cycle whose second half is the negation
# of its first half.
case = COMPARISON_CASES[3][0]
orbit = iterate(case.spec("E1"), case.state, 10_000)
det = detect_period(orbit)
half = det.detected_period // 2
print(f"\ndetected period {det.detected_period}, tail deviation {det.max_deviation:.1e}")
print("max |z_(n+12) + z_n| on the cycle:",
      f"{np.abs(np.roll(det.limit_cycle, -half) + det.limit_cycle).max():.1e}")
