"""Export an orbit and draw it as SVG.

Run with ``python3 demos/export_and_plot.py [OUTDIR]``; files go to
``demo_output/`` by default.
"""

import sys
from pathlib import Path

from holomap import iterate
from holomap.cases import COMPARISON_CASES, FRACTAL_CASES
from holomap.export import export_orbit, read_points
from holomap.svg import PlotKind, PlotSpec, render_plot

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

# Real and imaginary parts against the iterate index, for an orbit that
# converges onto a 2-cycle.
case = COMPARISON_CASES[1][0]
orbit = iterate(case.spec("E1"), case.state, 400)
export_orbit(orbit, out / "two_cycle.csv")
export_orbit(orbit, out / "two_cycle.json")
series = render_plot(read_points(out / "two_cycle.csv"), PlotSpec(PlotKind.SERIES, title="E1, 2-cycle"))
(out / "two_cycle_series.svg").write_text(series)

# A 50,000-point cloud in the plane.
case = FRACTAL_CASES[0]
cloud = iterate(case.spec("E1"), case.state, 50_000)
svg = render_plot(cloud.points, PlotSpec(PlotKind.SCATTER, width=700, height=700, marker_radius=0.5))
(out / "state_space.svg").write_text(svg)

for p in sorted(out.iterdir()):
    print(f"{p}  {p.stat().st_size / 1024:.0f} KiB")
