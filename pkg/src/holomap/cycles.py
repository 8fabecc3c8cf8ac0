"""Periodic solutions: Newton multistart on the cyclic system, period
detection in computed orbits, and cycle multipliers.

A period-``d`` cycle ``z_0, ..., z_{d-1}`` solves::

    z_n = F(z_{n-2 mod d}, z_{n-1 mod d}),   n = 0, ..., d-1

where ``F(prev, curr)`` is the step of the selected map.
"""

from __future__ import annotations

import cmath
import enum
import logging
from dataclasses import dataclass, field, replace

import numpy as np

from .maps import FORBIDDEN_THRESHOLD, ForbiddenStep, MapKind, MapSpec, Orbit, State, jacobian, step
from .stability import DegenerateParameters, StabilityClass, classify_moduli

log = logging.getLogger(__name__)

NEWTON_ACCEPT_TOL = 1e-10
DEDUP_TOL = 1e-6
MAX_NEWTON_ITER = 200
MAX_HALVINGS = 40
DEFAULT_STARTS = 1000


class CycleStability(enum.Enum):
    ATTRACTING = "attracting"
    REPELLING = "repelling"
    SADDLE_LIKE = "saddle_like"
    NON_HYPERBOLIC = "non_hyperbolic"


_FROM_CLASS = {
    StabilityClass.LOC_ASYMP_STABLE: CycleStability.ATTRACTING,
    StabilityClass.ALL_OUTSIDE: CycleStability.REPELLING,
    StabilityClass.SADDLE: CycleStability.SADDLE_LIKE,
    StabilityClass.NON_HYPERBOLIC: CycleStability.NON_HYPERBOLIC,
}


@dataclass(frozen=True)
class CycleSystem:
    spec: MapSpec
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("period must be >= 1")


@dataclass
class Cycle:
    spec: MapSpec
    period: int
    points: np.ndarray
    residual: float
    multipliers: np.ndarray | None = None
    multiplier_moduli: tuple[float, float] | None = None
    stability: CycleStability | None = None

    def __repr__(self):
        pts = ", ".join(f"{z:.6g}" for z in self.points)
        return f"Cycle(period={self.period}, points=[{pts}], stability={self.stability})"


@dataclass
class PeriodDetection:
    detected_period: int | None
    limit_cycle: np.ndarray
    max_deviation: float
    tol: float


class InsufficientLength(ValueError):
    pass


# ---------------------------------------------------------------------------
# residual of the cyclic system

def _f_and_partials(kind: MapKind, alpha, beta, prev, curr):
    if kind is MapKind.E1:
        f = alpha / curr + beta / prev
        return f, -beta / (prev * prev), -alpha / (curr * curr)
    if kind is MapKind.E8:
        f = alpha + curr / prev * beta
        return f, -beta * curr / (prev * prev), beta / prev
    f = prev / curr * alpha + beta
    return f, alpha / curr, -alpha * prev / (curr * curr)


def _residual_batch(spec: MapSpec, z: np.ndarray, with_jac: bool = True):
    """Residuals (and Jacobians) for a batch ``z`` of shape ``(m, d)``."""
    m, d = z.shape
    idx = np.arange(d)
    prev = z[:, (idx - 2) % d]
    curr = z[:, (idx - 1) % d]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        f, dprev, dcurr = _f_and_partials(spec.kind, spec.alpha, spec.beta, prev, curr)
    r = z - f
    if not with_jac:
        return r, None
    jac = np.zeros((m, d, d), dtype=complex)
    jac[:, idx, idx] += 1.0
    # np.add.at handles the coinciding columns of d = 1 and d = 2
    rows = np.broadcast_to(idx, (m, d))
    batch = np.broadcast_to(np.arange(m)[:, None], (m, d))
    np.add.at(jac, (batch, rows, np.broadcast_to((idx - 1) % d, (m, d))), -dcurr)
    np.add.at(jac, (batch, rows, np.broadcast_to((idx - 2) % d, (m, d))), -dprev)
    return r, jac


def cycle_residual(sys: CycleSystem, candidate) -> tuple[np.ndarray, np.ndarray]:
    """Residual vector and its analytic Jacobian for one candidate cycle.

    Raises
    ------
    ForbiddenStep
        If a candidate point is too close to zero to act as a divisor.
    """
    z = np.asarray(candidate, dtype=complex).reshape(1, -1)
    if z.shape[1] != sys.d:
        raise ValueError(f"expected {sys.d} points, got {z.shape[1]}")
    small = np.abs(z[0]) < FORBIDDEN_THRESHOLD
    if small.any():
        k = int(np.argmax(small))
        raise ForbiddenStep(f"z_{k}", complex(z[0, k]))
    r, jac = _residual_batch(sys.spec, z)
    return r[0], jac[0]


def map_residual(spec: MapSpec, points) -> float:
    """Max deviation of a cyclic point list from the map, via :func:`step`.

    This re-evaluates the map pointwise, independently of the vectorized
    residual used by the solver.
    """
    pts = [complex(p) for p in points]
    d = len(pts)
    worst = 0.0
    for n in range(d):
        nxt = step(spec, State(pts[(n - 2) % d], pts[(n - 1) % d]))
        worst = max(worst, abs(pts[n] - nxt))
    return worst


# ---------------------------------------------------------------------------
# Newton multistart

def _newton_batch(spec: MapSpec, z: np.ndarray, max_iter: int = MAX_NEWTON_ITER,
                  tol: float = NEWTON_ACCEPT_TOL):
    """Damped Newton with step halving, run on every row of ``z`` at once.

    Returns the final points and a boolean mask of converged rows.
    """
    z = z.copy()
    m = len(z)
    converged = np.zeros(m, dtype=bool)
    alive = np.ones(m, dtype=bool)

    def norms(zz):
        r, _ = _residual_batch(spec, zz, with_jac=False)
        nrm = np.sqrt(np.sum(np.abs(r) ** 2, axis=1))
        bad = ~np.isfinite(nrm) | (np.abs(zz) < FORBIDDEN_THRESHOLD).any(axis=1)
        nrm[bad] = np.inf
        return nrm

    for _ in range(max_iter):
        act = np.flatnonzero(alive & ~converged)
        if act.size == 0:
            break
        za = z[act]
        r, jac = _residual_batch(spec, za)
        rmax = np.abs(r).max(axis=1)
        finite = np.isfinite(rmax) & ~(np.abs(za) < FORBIDDEN_THRESHOLD).any(axis=1)
        alive[act[~finite]] = False
        done = finite & (rmax < tol)
        converged[act[done]] = True
        keep = finite & ~done
        act, za, r, jac = act[keep], za[keep], r[keep], jac[keep]
        if act.size == 0:
            continue
        jac_ok = np.isfinite(jac).all(axis=(1, 2))
        delta = np.zeros_like(za)
        if jac_ok.any():
            try:
                delta[jac_ok] = np.linalg.solve(jac[jac_ok], -r[jac_ok][..., None])[..., 0]
            except np.linalg.LinAlgError:
                for i in np.flatnonzero(jac_ok):
                    try:
                        delta[i] = np.linalg.solve(jac[i], -r[i])
                    except np.linalg.LinAlgError:
                        jac_ok[i] = False
        alive[act[~jac_ok]] = False
        base = np.sqrt(np.sum(np.abs(r) ** 2, axis=1))
        t = np.ones(len(act))
        accepted = ~jac_ok
        trial = za.copy()
        for _h in range(MAX_HALVINGS):
            pending = np.flatnonzero(~accepted)
            if pending.size == 0:
                break
            cand = za[pending] + t[pending, None] * delta[pending]
            ok = norms(cand) < base[pending]
            trial[pending[ok]] = cand[ok]
            accepted[pending[ok]] = True
            t[pending[~ok]] *= 0.5
        stuck = ~accepted
        alive[act[stuck]] = False
        z[act] = trial
    # final check for rows that converged on the last update
    act = np.flatnonzero(alive & ~converged)
    if act.size:
        r, _ = _residual_batch(spec, z[act], with_jac=False)
        rmax = np.abs(r).max(axis=1)
        converged[act[np.isfinite(rmax) & (rmax < tol)]] = True
    return z, converged


def minimal_period(points, tol: float = DEDUP_TOL) -> int:
    """Smallest ``p`` dividing ``len(points)`` with ``z_{n+p} == z_n``."""
    z = np.asarray(points, dtype=complex)
    d = len(z)
    for p in range(1, d):
        if d % p == 0 and np.max(np.abs(np.roll(z, -p) - z)) <= tol:
            return p
    return d


def _rotation_distance(a: np.ndarray, b: np.ndarray) -> float:
    return min(float(np.max(np.abs(np.roll(a, -k) - b))) for k in range(len(a)))


def _key(z: complex) -> tuple[int, int]:
    return (int(round(z.real * 1e8)), int(round(z.imag * 1e8)))


def canonical_rotation(points) -> np.ndarray:
    """Rotate so the lexicographically smallest ``(re, im)`` point is first.

    Points are compared after rounding to 1e-8 so rounding noise in a
    component does not pick a different rotation.
    """
    z = np.asarray(points, dtype=complex)
    keys = [_key(x) for x in z]
    k = min(range(len(z)), key=lambda i: keys[i])
    return np.roll(z, -k)


@dataclass
class MultistartResult:
    system: CycleSystem
    starts: int
    seed: int
    cycles: list[Cycle]
    converged: int
    lower_period: dict[int, int] = field(default_factory=dict)
    lower_period_cycles: list[Cycle] = field(default_factory=list)

    @property
    def equilibrium_hits(self) -> int:
        return self.lower_period.get(1, 0)


def start_radius(spec: MapSpec) -> float:
    return 2.0 * (1.0 + abs(spec.alpha) + abs(spec.beta))


def newton_multistart(sys: CycleSystem, starts: int = DEFAULT_STARTS, seed: int = 0) -> MultistartResult:
    """Run Newton from ``starts`` random candidates and sort the outcomes.

    Each coordinate of a start is drawn uniformly from the disk of radius
    :func:`start_radius`.  Converged solutions are deduplicated up to cyclic
    rotation; those whose minimal period is a proper divisor of ``d`` are
    counted in ``lower_period`` and kept apart from ``cycles``.
    """
    if starts < 1:
        raise ValueError("starts must be >= 1")
    rng = np.random.default_rng(seed)
    radius = start_radius(sys.spec)
    rad = radius * np.sqrt(rng.random((starts, sys.d)))
    ang = 2 * np.pi * rng.random((starts, sys.d))
    z0 = rad * np.exp(1j * ang)
    z, ok = _newton_batch(sys.spec, z0)

    cycles: list[Cycle] = []
    lower: list[Cycle] = []
    lower_counts: dict[int, int] = {}
    for i in np.flatnonzero(ok):
        pts = z[i]
        try:
            res = map_residual(sys.spec, pts)
        except ForbiddenStep:
            continue
        if not res < NEWTON_ACCEPT_TOL:
            continue
        p = minimal_period(pts)
        target = lower if p < sys.d else cycles
        if p < sys.d:
            lower_counts[p] = lower_counts.get(p, 0) + 1
            pts = pts[:p]
        if any(_rotation_distance(pts, c.points) <= DEDUP_TOL for c in target if len(c.points) == len(pts)):
            continue
        pts = canonical_rotation(pts)
        cyc = Cycle(sys.spec, len(pts), pts, map_residual(sys.spec, pts))
        target.append(cycle_stability(cyc))
    cycles.sort(key=lambda c: (c.period, _key(c.points[0])))
    lower.sort(key=lambda c: (c.period, _key(c.points[0])))
    log.debug("d=%d: %d/%d starts converged, lower-period hits %s",
              sys.d, int(ok.sum()), starts, lower_counts)
    return MultistartResult(sys, starts, seed, cycles, int(ok.sum()), lower_counts, lower)


def find_cycles(sys: CycleSystem, starts: int = DEFAULT_STARTS, seed: int = 0) -> list[Cycle]:
    """Distinct cycles of minimal period exactly ``sys.d``.

    An empty list only says that no such cycle was reached from ``starts``
    random starts; it is evidence, not proof, of nonexistence.
    """
    return newton_multistart(sys, starts, seed).cycles


# ---------------------------------------------------------------------------
# stability of cycles

def monodromy(spec: MapSpec, points) -> np.ndarray:
    """Product of companion-form Jacobians once around the cycle."""
    z = [complex(p) for p in points]
    d = len(z)
    m = np.eye(2, dtype=complex)
    for n in range(d):
        m = jacobian(spec, State(z[(n - 1) % d], z[n])) @ m
    return m


def cycle_stability(c: Cycle) -> Cycle:
    """Attach multipliers and their classification to ``c``."""
    mult = np.linalg.eigvals(monodromy(c.spec, c.points))
    mult = mult[np.argsort(-np.abs(mult), kind="stable")]
    moduli = (float(abs(mult[0])), float(abs(mult[1])))
    return replace(c, multipliers=mult, multiplier_moduli=moduli,
                   stability=_FROM_CLASS[classify_moduli(moduli)])


def two_cycle_closed_form(spec: MapSpec) -> list[Cycle]:
    """The non-equilibrium 2-cycle ``{p, -p}`` of E1, ``p**2 = beta - alpha``.

    Adding the two cycle equations gives ``p + q = 0`` (off the diagonal),
    and then ``p * q = alpha - beta``.
    """
    if spec.kind is not MapKind.E1:
        raise ValueError("closed form available for E1 only")
    if spec.alpha == spec.beta:
        raise DegenerateParameters("alpha == beta: no 2-cycle off the equilibria")
    p = cmath.sqrt(spec.beta - spec.alpha)
    pts = canonical_rotation([p, -p])
    res = map_residual(spec, pts)
    if not res < NEWTON_ACCEPT_TOL * max(1.0, abs(p)):
        raise ArithmeticError(f"closed-form 2-cycle failed substitution (residual {res:.3g})")
    return [cycle_stability(Cycle(spec, 2, pts, res))]


def closed_form_two_cycle_matrix(alpha: complex, beta: complex) -> np.ndarray:
    """The 2x2 matrix circulated in the literature as the E1 2-cycle
    linearization.

    Its eigenvalues are *not* those of :func:`monodromy` at the 2-cycle; it
    is kept for auditing that claim.
    """
    a, b = complex(alpha), complex(beta)
    return np.array([
        [a / (b - a), b / (b - a)],
        [(-a * a + b * a + b * b) / (a - b) ** 2, a * b / (a - b) ** 2],
    ])


def closed_form_two_cycle_eigenvalues(alpha: complex, beta: complex) -> tuple[complex, complex]:
    a, b = complex(alpha), complex(beta)
    root = cmath.sqrt(a ** 4 + 4 * a ** 3 * b - 8 * a * a * b * b + 4 * b ** 4)
    den = 2 * (a - b) ** 2
    return ((-a * a + 2 * a * b - root) / den, (-a * a + 2 * a * b + root) / den)


# ---------------------------------------------------------------------------
# period detection

def detect_period(o: Orbit | np.ndarray, p_max: int = 64, window: int = 200,
                  tol: float | None = None, transient: int | None = None) -> PeriodDetection:
    """Smallest ``p <= p_max`` with ``|z_{n+p} - z_n| < tol`` on the tail.

    The first ``transient`` points (default: half the orbit) are ignored and
    the test runs over the last ``window`` values of ``n``.  The default
    ``tol`` is ``1e-6 * (1 + median |z|)`` over that window.
    """
    pts = np.asarray(o.points if isinstance(o, Orbit) else o, dtype=complex)
    if isinstance(o, Orbit) and not o.status.completed:
        raise InsufficientLength(f"orbit terminated early ({o.status})")
    n = len(pts)
    if transient is None:
        transient = n // 2
    if n < transient + window + p_max:
        raise InsufficientLength(
            f"need at least {transient + window + p_max} points, have {n}")
    tail = pts[transient:]
    if tol is None:
        tol = 1e-6 * (1.0 + float(np.median(np.abs(tail[-window:]))))
    best = np.inf
    for p in range(1, p_max + 1):
        seg = tail[-(window + p):]
        dev = float(np.max(np.abs(seg[p:] - seg[:-p])))
        best = min(best, dev)
        if dev < tol:
            return PeriodDetection(p, tail[-p:].copy(), dev, tol)
    return PeriodDetection(None, np.empty(0, dtype=complex), best, tol)
