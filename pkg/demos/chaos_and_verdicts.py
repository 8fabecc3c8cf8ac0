"""Orbit verdicts, Lyapunov exponents, box dimensions and a small sweep.

Run with ``python3 demos/chaos_and_verdicts.py`` (about ten seconds).
"""

import numpy as np

from holomap import iterate
from holomap.cases import COMPARISON_CASES, FRACTAL_CASES
from holomap.chaos import box_dimension, lyapunov_max
from holomap.classify import Axis, SweepGrid, VerdictKind, classify_orbit, sweep

# One verdict per (case, map). OrbitCase.spec swaps the lagged arguments by
# default, the convention under which these cases behave as labelled.
for case, _ in COMPARISON_CASES:
    for kind in ("E1", "E8", "E9"):
        r = classify_orbit(case.spec(kind), case.state)
        extra = ""
        if r.limit is not None:
            extra = f"limit {r.limit:.4f}"
        elif r.period:
            extra = f"period {r.period}"
        elif r.lambda_max is not None:
            extra = f"lambda {r.lambda_max:.4f}"
        print(f"{case.name} {kind}: {r.verdict.name.lower():<20} {extra}")

# The exponent estimate settles within a few thousand steps.
case = COMPARISON_CASES[0][0]
est = lyapunov_max(case.spec("E1"), case.state, steps=20_000, history=True)
print("\nrunning estimate at 1k, 5k, 20k steps:", np.round(est.history[[999, 4999, -1]], 4))

# Box-counting dimension of long orbits of the scattered-looking cases.
for case in FRACTAL_CASES:
    pts = iterate(case.spec("E1"), case.state, 50_000).points
    d = box_dimension(pts)
    print(f"{case.name}: box dimension {d.dimension:.3f} (fit r2 {d.fit_r2:.3f})")

# A raster of verdicts over the alpha plane, other values held at one case.
# Initial values hardly matter for these cases; the parameters do.
case = COMPARISON_CASES[1][0]
grid = sweep(SweepGrid(case.spec("E1"), case.state,
                       (Axis("alpha.im", 100, -100, 15), Axis("alpha.re", -100, 100, 15))),
             budget=2000, lyapunov_steps=2000)
letters = {VerdictKind.CONVERGENT: "c", VerdictKind.PERIODIC_CONVERGENT: "p", VerdictKind.UNBOUNDED: "u",
           VerdictKind.FORBIDDEN_HIT: "x", VerdictKind.CHAOTIC: "*", VerdictKind.UNDETERMINED: "?"}
print("\nE1 verdicts over alpha (rows: im from 100 down, columns: re from -100 up):")
for row in grid.raster:
    print("  " + " ".join(letters[VerdictKind(v)] for v in row))
print("  c convergent, p periodic, u unbounded, x forbidden, * chaotic, ? undetermined")
