"""Orbit verdicts and parameter / initial-value sweeps.

The cascade, cheapest test first:

1. guards: forbidden divisor or overflow while iterating
2. convergence: the trailing window stays within ``1e-6 (1 + |z_final|)``
   of the final iterate
3. periodicity: :func:`holomap.cycles.detect_period` finds ``p >= 2``
4. chaos: largest Lyapunov exponent above :data:`CHAOS_THRESHOLD`
5. otherwise undetermined
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .chaos import DEFAULT_TRANSIENT, OrbitTerminated, lyapunov_max
from .cycles import InsufficientLength, detect_period
from .maps import MapSpec, OrbitStatus, State, StatusKind, iterate

CHAOS_THRESHOLD = 0.01
CONVERGENCE_WINDOW = 200
DEFAULT_BUDGET = 10_000
SWEEP_BUDGET = 5_000
SWEEP_LYAPUNOV_STEPS = 10_000
DEFAULT_LYAPUNOV_STEPS = 100_000
SWEEP_CELL_CAP = 10 ** 6


class VerdictKind(enum.IntEnum):
    """Verdicts; the integer values are the raster codes used by sweeps."""

    UNDETERMINED = 0
    CONVERGENT = 1
    PERIODIC_CONVERGENT = 2
    UNBOUNDED = 3
    FORBIDDEN_HIT = 4
    CHAOTIC = 5


@dataclass
class Metrics:
    iterates: int
    final_deviation: float | None = None
    detected_period: int | None = None
    lambda_max: float | None = None
    terminated_at: int | None = None


@dataclass
class ClassificationReport:
    spec: MapSpec
    initial: State
    verdict: VerdictKind
    metrics: Metrics
    limit: complex | None = None
    period: int | None = None
    cycle: np.ndarray | None = None
    step: int | None = None
    lambda_max: float | None = None

    def to_dict(self) -> dict:
        def cx(z):
            return None if z is None else [z.real, z.imag]

        return {
            "spec": {"kind": self.spec.kind.value, "alpha": cx(self.spec.alpha), "beta": cx(self.spec.beta)},
            "initial": {"z0": cx(self.initial.z_prev), "z1": cx(self.initial.z_curr)},
            "verdict": self.verdict.name.lower(),
            "limit": cx(self.limit),
            "period": self.period,
            "cycle": None if self.cycle is None else [cx(complex(z)) for z in self.cycle],
            "step": self.step,
            "lambda_max": self.lambda_max,
            "metrics": {
                "iterates": self.metrics.iterates,
                "final_deviation": self.metrics.final_deviation,
                "detected_period": self.metrics.detected_period,
                "lambda_max": self.metrics.lambda_max,
                "terminated_at": self.metrics.terminated_at,
            },
        }


def _guard_report(spec, s, status: OrbitStatus, n_points: int) -> ClassificationReport:
    m = Metrics(iterates=n_points, terminated_at=status.step)
    if status.kind is StatusKind.OVERFLOW:
        return ClassificationReport(spec, s, VerdictKind.UNBOUNDED, m, step=status.step)
    return ClassificationReport(spec, s, VerdictKind.FORBIDDEN_HIT, m, step=status.step)


def classify_orbit(spec: MapSpec, s: State, budget: int = DEFAULT_BUDGET,
                   lyapunov_steps: int = DEFAULT_LYAPUNOV_STEPS,
                   lyapunov_transient: int = DEFAULT_TRANSIENT) -> ClassificationReport:
    """Classify the orbit of ``s`` under ``spec`` (see module docstring).

    If the longer Lyapunov run hits a guard that the ``budget`` iterates did
    not reach, the guard verdict is reported instead.
    """
    if budget < 2000:
        raise ValueError("budget must be >= 2000")
    orbit = iterate(spec, s, budget)
    if not orbit.status.completed:
        return _guard_report(spec, s, orbit.status, len(orbit))

    pts = orbit.points
    final = complex(pts[-1])
    dev = float(np.max(np.abs(pts[-CONVERGENCE_WINDOW:] - final)))
    metrics = Metrics(iterates=len(pts), final_deviation=dev)
    if dev < 1e-6 * (1.0 + abs(final)):
        return ClassificationReport(spec, s, VerdictKind.CONVERGENT, metrics, limit=final)

    try:
        det = detect_period(orbit)
    except InsufficientLength:
        det = None
    if det is not None and det.detected_period is not None:
        metrics.detected_period = det.detected_period
        if det.detected_period >= 2:
            return ClassificationReport(spec, s, VerdictKind.PERIODIC_CONVERGENT, metrics,
                                        limit=complex(det.limit_cycle[-1]), period=det.detected_period,
                                        cycle=det.limit_cycle)

    try:
        est = lyapunov_max(spec, s, transient=lyapunov_transient, steps=lyapunov_steps)
    except OrbitTerminated as exc:
        metrics.terminated_at = exc.status.step
        return _guard_report(spec, s, exc.status, len(pts))
    metrics.lambda_max = est.lambda_max
    if est.lambda_max > CHAOS_THRESHOLD:
        return ClassificationReport(spec, s, VerdictKind.CHAOTIC, metrics, lambda_max=est.lambda_max)
    return ClassificationReport(spec, s, VerdictKind.UNDETERMINED, metrics, lambda_max=est.lambda_max)


# ---------------------------------------------------------------------------
# sweeps

AXES = ("z0.re", "z0.im", "z1.re", "z1.im", "alpha.re", "alpha.im", "beta.re", "beta.im")


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    resolution: int

    def __post_init__(self):
        if self.name not in AXES:
            raise ValueError(f"unknown axis {self.name!r}; expected one of {', '.join(AXES)}")
        if self.resolution < 1:
            raise ValueError("resolution must be >= 1")

    @property
    def values(self) -> np.ndarray:
        if self.resolution == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.resolution)


@dataclass
class SweepGrid:
    """Axes that vary, the base point for everything else, and the raster.

    ``raster`` has one entry per cell (shape = axis resolutions, in axis
    order) holding :class:`VerdictKind` codes; -1 marks an unfilled cell.
    """

    spec: MapSpec
    initial: State
    axes: tuple[Axis, ...]
    raster: np.ndarray | None = field(default=None, repr=False)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(a.resolution for a in self.axes)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape)) if self.axes else 1

    def cell_inputs(self, index: tuple[int, ...]) -> tuple[MapSpec, State]:
        vals = {
            "z0.re": self.initial.z_prev.real, "z0.im": self.initial.z_prev.imag,
            "z1.re": self.initial.z_curr.real, "z1.im": self.initial.z_curr.imag,
            "alpha.re": self.spec.alpha.real, "alpha.im": self.spec.alpha.imag,
            "beta.re": self.spec.beta.real, "beta.im": self.spec.beta.imag,
        }
        for axis, i in zip(self.axes, index):
            vals[axis.name] = float(axis.values[i])
        spec = MapSpec(self.spec.kind, complex(vals["alpha.re"], vals["alpha.im"]),
                       complex(vals["beta.re"], vals["beta.im"]))
        state = State(complex(vals["z0.re"], vals["z0.im"]), complex(vals["z1.re"], vals["z1.im"]))
        return spec, state


def _classify_cell(args):
    spec, state, budget, lyap_steps = args
    return int(classify_orbit(spec, state, budget, lyapunov_steps=lyap_steps).verdict)


def sweep(grid: SweepGrid, budget: int = SWEEP_BUDGET, seed: int = 0,
          lyapunov_steps: int = SWEEP_LYAPUNOV_STEPS, cap: int = SWEEP_CELL_CAP,
          workers: int | None = None) -> SweepGrid:
    """Classify every cell of ``grid`` and fill its raster.

    No estimator is randomized, so ``seed`` only labels the run; results do
    not depend on ``workers`` or scheduling.
    """
    if grid.size > cap:
        raise ValueError(f"sweep has {grid.size} cells, cap is {cap}")
    indices = list(itertools.product(*(range(n) for n in grid.shape)))
    jobs = [(*grid.cell_inputs(ix), budget, lyapunov_steps) for ix in indices]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            codes = list(pool.map(_classify_cell, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        codes = [_classify_cell(j) for j in jobs]
    raster = np.array(codes, dtype=np.int8).reshape(grid.shape)
    return SweepGrid(grid.spec, grid.initial, grid.axes, raster)
