"""Largest Lyapunov exponent and box-counting dimension."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .maps import ForbiddenStep, MapSpec, OrbitStatus, State, StatusKind, _below_overflow, _bottom_row, _step

DEFAULT_TRANSIENT = 1000
DEFAULT_STEPS = 100_000


class OrbitTerminated(RuntimeError):
    def __init__(self, status: OrbitStatus):
        super().__init__(f"orbit terminated: {status}")
        self.status = status


class DegenerateExtent(ValueError):
    pass


@dataclass
class LyapunovEstimate:
    lambda_max: float
    steps_used: int
    transient_skipped: int
    history: np.ndarray | None = None


def lyapunov_max(spec: MapSpec, s: State, transient: int = DEFAULT_TRANSIENT,
                 steps: int = DEFAULT_STEPS, history: bool = False) -> LyapunovEstimate:
    """Largest Lyapunov exponent of the orbit of ``s`` (natural log).

    A complex tangent vector, started at ``(1, 0)``, is pushed through the
    analytic Jacobian and renormalized at every step; the exponent is the
    mean log growth over ``steps`` steps after ``transient`` discarded ones.
    The map is holomorphic, so this equals the largest exponent of the
    underlying real 4-dimensional system.

    Raises
    ------
    OrbitTerminated
        If the orbit hits the forbidden set or overflows.
    """
    if steps < 1 or transient < 0:
        raise ValueError("need steps >= 1 and transient >= 0")
    kind, alpha, beta = spec.kind, spec.alpha, spec.beta
    zp, zc = s.z_prev, s.z_curr
    v0, v1 = 1 + 0j, 0j
    total = 0.0
    hist = np.empty(steps) if history else None
    log = math.log
    sqrt = math.sqrt
    for k in range(1, transient + steps + 1):
        try:
            d_prev, d_curr = _bottom_row(kind, alpha, beta, zp, zc)
            zn = _step(kind, alpha, beta, zp, zc)
        except ForbiddenStep as exc:
            raise OrbitTerminated(OrbitStatus(StatusKind.FORBIDDEN_HIT, k, exc.divisor)) from None
        if not _below_overflow(zn):
            raise OrbitTerminated(OrbitStatus(StatusKind.OVERFLOW, k))
        v0, v1 = v1, d_prev * v0 + d_curr * v1
        norm = sqrt(v0.real * v0.real + v0.imag * v0.imag + v1.real * v1.real + v1.imag * v1.imag)
        if norm == 0.0 or not math.isfinite(norm):
            raise ArithmeticError(f"tangent vector degenerated at step {k}")
        v0 /= norm
        v1 /= norm
        if k > transient:
            total += log(norm)
            if hist is not None:
                hist[k - transient - 1] = total / (k - transient)
        zp, zc = zc, zn
    return LyapunovEstimate(total / steps, steps, transient, hist)


@dataclass
class BoxDimEstimate:
    dimension: float
    scales: list[tuple[float, int]]
    fit_r2: float


def box_counts(points, k_min: int, k_max: int) -> list[tuple[float, int]]:
    """Occupied-cell counts on grids of side ``diag * 2**-k``.

    The grid is anchored at the lower-left corner of the bounding box and
    ``diag`` is the length of its diagonal.
    """
    z = np.asarray(points, dtype=complex).ravel()
    x, y = z.real, z.imag
    x0, y0 = x.min(), y.min()
    diag = math.hypot(x.max() - x0, y.max() - y0)
    out = []
    for k in range(k_min, k_max + 1):
        side = diag * 2.0 ** -k
        ix = np.floor((x - x0) / side).astype(np.int64)
        iy = np.floor((y - y0) / side).astype(np.int64)
        cells = np.unique(ix * (np.int64(1) << 32) + iy)
        out.append((side, int(cells.size)))
    return out


def box_dimension(points, k_min: int = 4, k_max: int = 10) -> BoxDimEstimate:
    """Box-counting dimension of a planar point cloud.

    Slope of ``log(count)`` against ``log(1/side)`` by least squares over
    ``k_min..k_max`` (at least 5 scales).  A cloud collapsed to a single
    point has dimension 0.
    """
    z = np.asarray(points, dtype=complex).ravel()
    if z.size < 1000:
        raise ValueError("need at least 1000 points")
    if k_min < 2 or k_max - k_min < 4:
        raise ValueError("need k_min >= 2 and at least 5 scales")
    if not np.isfinite(z).all():
        raise ValueError("points must be finite")
    width = z.real.max() - z.real.min()
    height = z.imag.max() - z.imag.min()
    if width == 0 and height == 0:
        sides = [2.0 ** -k for k in range(k_min, k_max + 1)]
        return BoxDimEstimate(0.0, [(s, 1) for s in sides], 1.0)
    if width == 0 or height == 0:
        raise DegenerateExtent("bounding box has zero width or height")
    scales = box_counts(z, k_min, k_max)
    lx = np.log([1.0 / s for s, _ in scales])
    ly = np.log([n for _, n in scales])
    slope, intercept = np.polyfit(lx, ly, 1)
    fit = slope * lx + intercept
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - float(np.sum((ly - fit) ** 2)) / ss_tot
    return BoxDimEstimate(float(slope), scales, r2)
